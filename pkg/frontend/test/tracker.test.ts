import assert from "node:assert/strict";
import { test } from "node:test";

import { DEFAULT_CONFIG } from "../src/config.js";
import { ViewerModel } from "../src/state.js";
import { SegmentLoop, SegmentResponse } from "../src/tracker.js";

function response(tag: number): SegmentResponse {
  return {
    seed: [tag, tag],
    points: [[tag, 0], [0, tag], [tag, tag]],
    diameter_mm: tag,
    area_mm2: tag * tag,
    elapsed_ms: 1,
    cut_indices: [1, 2, 3],
  };
}

/** A segment sender whose responses resolve only when the test says so. */
function manualSender() {
  const pending: { seed: [number, number]; resolve: (r: SegmentResponse) => void; reject: (e: Error) => void }[] = [];
  const send = (seed: [number, number]) =>
    new Promise<SegmentResponse>((resolve, reject) => {
      pending.push({ seed, resolve, reject });
    });
  return { send, pending };
}

const tick = () => new Promise<void>((r) => setTimeout(r, 0));

test("only one request is in flight; the newest queued position wins", async () => {
  const { send, pending } = manualSender();
  const loop = new SegmentLoop(send);
  const rendered: number[] = [];
  loop.onResult = (r) => rendered.push(r.seed[0]);

  loop.request([1, 1], DEFAULT_CONFIG);
  loop.request([2, 2], DEFAULT_CONFIG); // queued
  loop.request([3, 3], DEFAULT_CONFIG); // replaces the queued one
  assert.equal(pending.length, 1);

  pending[0].resolve(response(1));
  await tick();
  assert.equal(pending.length, 2); // only the newest follow-up went out
  assert.deepEqual(pending[1].seed, [3, 3]);

  pending[1].resolve(response(3));
  await tick();
  assert.deepEqual(rendered, [1, 3]);
});

test("a stale response arriving after a takeover is never rendered", async () => {
  const { send, pending } = manualSender();
  let clock = 0;
  const loop = new SegmentLoop(send, { takeoverMs: 100, now: () => clock });
  const rendered: number[] = [];
  loop.onResult = (r) => rendered.push(r.seed[0]);

  loop.request([1, 1], DEFAULT_CONFIG);
  clock = 500; // request 1 is stuck past the takeover window
  loop.request([2, 2], DEFAULT_CONFIG);
  assert.equal(pending.length, 2);

  pending[1].resolve(response(2)); // the newer answer arrives first
  await tick();
  pending[0].resolve(response(1)); // the delayed stale answer arrives late
  await tick();

  assert.deepEqual(rendered, [2], "stale response must be discarded");
});

test("out-of-order completion keeps the most recent response on screen", async () => {
  const { send, pending } = manualSender();
  let clock = 0;
  const loop = new SegmentLoop(send, { takeoverMs: 10, now: () => clock });
  const model = new ViewerModel();
  loop.onResult = (r) => model.setLive(r);

  loop.request([1, 1], DEFAULT_CONFIG);
  clock = 50;
  loop.request([2, 2], DEFAULT_CONFIG);
  clock = 100;
  loop.request([3, 3], DEFAULT_CONFIG);

  // artificial delays: answers come back newest-first
  assert.equal(pending.length, 3);
  pending[2].resolve(response(3));
  await tick();
  pending[0].resolve(response(1));
  pending[1].resolve(response(2));
  await tick();

  assert.equal(model.live?.seed[0], 3);
});

test("a failed request surfaces a status and keeps the last good contour", async () => {
  const { send, pending } = manualSender();
  const loop = new SegmentLoop(send);
  const model = new ViewerModel();
  loop.onResult = (r) => model.setLive(r);
  loop.onError = (m) => model.fail(m);

  loop.request([5, 5], DEFAULT_CONFIG);
  pending[0].resolve(response(5));
  await tick();
  assert.equal(model.live?.diameter_mm, 5);

  loop.request([6, 6], DEFAULT_CONFIG);
  pending[1].reject(new Error("server down"));
  await tick();

  assert.equal(model.status, "server down");
  assert.equal(model.live?.diameter_mm, 5, "last good contour stays");
});

test("rendered point count mirrors the response points length", async () => {
  const { send, pending } = manualSender();
  const loop = new SegmentLoop(send);
  const model = new ViewerModel();
  loop.onResult = (r) => model.setLive(r);

  loop.request([1, 1], DEFAULT_CONFIG);
  const resp = response(1);
  resp.points = Array.from({ length: 60 }, (_, i) => [i, i] as [number, number]);
  pending[0].resolve(resp);
  await tick();
  assert.equal(model.live?.points.length, 60);
});

test("freeze captures the live contour; clicking with none is a no-op", () => {
  const model = new ViewerModel();
  assert.equal(model.freeze(), null);
  assert.equal(model.frozen.length, 0);

  model.setLive(response(7));
  const first = model.freeze();
  assert.equal(first?.diameter_mm, 7);

  model.setLive(response(9));
  model.freeze();
  assert.equal(model.frozen.length, 2);
  assert.deepEqual(
    model.frozen.map((f) => f.diameter_mm),
    [7, 9],
  );

  model.clearFrozen();
  assert.equal(model.frozen.length, 0);
});

test("frozen results are snapshots, immune to later live updates", () => {
  const model = new ViewerModel();
  model.setLive(response(4));
  model.freeze();
  model.live!.points[0][0] = 999; // mutate the live object
  assert.equal(model.frozen[0].points[0][0], 4);
});
