import assert from "node:assert/strict";
import { test } from "node:test";

import { Scheduler, debounce } from "../src/debounce.js";

/** Deterministic scheduler driven by an explicit virtual clock. */
function manualScheduler() {
  let now = 0;
  let nextId = 1;
  const queue = new Map<number, { at: number; fn: () => void }>();
  const scheduler: Scheduler = {
    set: (fn, ms) => {
      const id = nextId++;
      queue.set(id, { at: now + ms, fn });
      return id;
    },
    clear: (handle) => {
      queue.delete(handle as number);
    },
  };
  const advance = (ms: number) => {
    now += ms;
    for (const [id, entry] of [...queue.entries()].sort((a, b) => a[1].at - b[1].at)) {
      if (entry.at <= now) {
        queue.delete(id);
        entry.fn();
      }
    }
  };
  return { scheduler, advance };
}

test("a rapid burst collapses to a single trailing call", () => {
  const { scheduler, advance } = manualScheduler();
  const calls: number[] = [];
  const fire = debounce((v: number) => calls.push(v), 30, scheduler);

  for (let i = 0; i < 100; i++) fire(i);
  assert.deepEqual(calls, []);
  advance(30);
  assert.deepEqual(calls, [99], "only the last burst value fires");
});

test("calls separated by more than the window each fire", () => {
  const { scheduler, advance } = manualScheduler();
  const calls: number[] = [];
  const fire = debounce((v: number) => calls.push(v), 30, scheduler);

  fire(1);
  advance(31);
  fire(2);
  advance(31);
  assert.deepEqual(calls, [1, 2]);
});

test("a call inside the window resets the timer", () => {
  const { scheduler, advance } = manualScheduler();
  const calls: number[] = [];
  const fire = debounce((v: number) => calls.push(v), 30, scheduler);

  fire(1);
  advance(20);
  fire(2);
  advance(20);
  assert.deepEqual(calls, [], "window restarted, nothing fired yet");
  advance(10);
  assert.deepEqual(calls, [2]);
});
