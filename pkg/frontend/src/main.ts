/** Viewer wiring: pointer events, config panel, and rendering. */

import { fetchImage, makeSegmentSender } from "./api.js";
import { DEFAULT_CONFIG, TemplateConfig, isValid, maxDelta, normalize } from "./config.js";
import { debounce } from "./debounce.js";
import { Renderer } from "./render.js";
import { ViewerModel } from "./state.js";
import { SegmentLoop } from "./tracker.js";

const DEBOUNCE_MS = 30;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function start(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const baseUrl = params.get("api") ?? "http://127.0.0.1:8787";

  const canvas = el<HTMLCanvasElement>("view");
  const statusBar = el<HTMLElement>("status");
  const diameterLabel = el<HTMLElement>("diameter");
  const renderer = new Renderer(canvas);
  const model = new ViewerModel();

  let cfg: TemplateConfig = { ...DEFAULT_CONFIG };
  let cursor: [number, number] | null = null;

  const raysInput = el<HTMLInputElement>("rays");
  const nodesInput = el<HTMLInputElement>("nodes");
  const radiusInput = el<HTMLInputElement>("radius");
  const deltaInput = el<HTMLInputElement>("delta");
  const zoomInput = el<HTMLInputElement>("zoom");

  const redraw = () =>
    renderer.draw(
      model.live,
      model.frozen,
      cursor ? { seed: cursor, radius: cfg.radius_px } : null,
    );

  const showStatus = (message: string | null) => {
    statusBar.textContent = message ?? "";
    statusBar.classList.toggle("error", message !== null);
  };

  let image;
  try {
    image = await fetchImage(baseUrl);
  } catch (err) {
    showStatus(`cannot reach the segmentation service at ${baseUrl}: ${err}`);
    return;
  }
  renderer.setImage(image.image);
  redraw();

  const loop = new SegmentLoop(makeSegmentSender(baseUrl));
  loop.onResult = (resp) => {
    model.setLive(resp);
    diameterLabel.textContent = `${resp.diameter_mm.toFixed(1)} mm`;
    showStatus(null);
    redraw();
  };
  loop.onError = (message) => {
    model.fail(message); // keep the last good contour
    showStatus(message);
    redraw();
  };

  const requestSegment = debounce(() => {
    if (cursor && isValid(cfg)) loop.request(cursor, cfg);
  }, DEBOUNCE_MS);

  canvas.addEventListener("pointermove", (ev) => {
    const rect = canvas.getBoundingClientRect();
    cursor = renderer.toImage(ev.clientX - rect.left, ev.clientY - rect.top);
    redraw();
    requestSegment();
  });

  canvas.addEventListener("click", () => {
    if (model.freeze()) redraw();
  });

  el<HTMLButtonElement>("clear").addEventListener("click", () => {
    model.clearFrozen();
    redraw();
  });

  const syncConfigBounds = () => {
    deltaInput.max = String(Math.max(0, maxDelta(cfg)));
    deltaInput.disabled = maxDelta(cfg) < 0;
  };

  const onConfigChange = () => {
    cfg = normalize({
      rays: parseInt(raysInput.value, 10),
      nodes: parseInt(nodesInput.value, 10),
      radius_px: parseFloat(radiusInput.value),
      delta: parseInt(deltaInput.value, 10),
    });
    deltaInput.value = String(cfg.delta);
    syncConfigBounds();
    redraw();
    requestSegment();
  };

  for (const input of [raysInput, nodesInput, radiusInput, deltaInput]) {
    input.addEventListener("change", onConfigChange);
    input.addEventListener("input", onConfigChange);
  }
  zoomInput.addEventListener("change", () => {
    renderer.setZoom(zoomInput.checked ? 2 : 1);
    redraw();
  });
  syncConfigBounds();
}

void start();
