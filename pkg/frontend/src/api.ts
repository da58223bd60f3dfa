/** HTTP client for the segmentation service. */

import { PgmImage, parsePgm } from "./pgm.js";
import { SegmentResponse, SegmentSender } from "./tracker.js";

export interface LoadedImage {
  image: PgmImage;
  spacingMm: number;
}

export async function fetchImage(baseUrl: string): Promise<LoadedImage> {
  const resp = await fetch(`${baseUrl}/api/image`);
  if (!resp.ok) throw new Error(`image request failed: HTTP ${resp.status}`);
  const spacingMm = parseFloat(resp.headers.get("X-Spacing") ?? "1");
  return { image: parsePgm(await resp.arrayBuffer()), spacingMm };
}

export function makeSegmentSender(baseUrl: string): SegmentSender {
  return async (seed, cfg) => {
    const resp = await fetch(`${baseUrl}/api/segment`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        seed_x: seed[0],
        seed_y: seed[1],
        rays: cfg.rays,
        nodes: cfg.nodes,
        radius_px: cfg.radius_px,
        delta: cfg.delta,
      }),
    });
    const payload = await resp.json();
    if (!resp.ok) {
      throw new Error(payload.error ?? `segment request failed: HTTP ${resp.status}`);
    }
    return payload as SegmentResponse;
  };
}
