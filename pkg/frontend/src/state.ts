/** Viewer state: the live contour, frozen results, and the status banner. */

import { SegmentResponse } from "./tracker.js";

export interface FrozenResult {
  seed: [number, number];
  points: [number, number][];
  diameter_mm: number;
}

export class ViewerModel {
  live: SegmentResponse | null = null;
  frozen: FrozenResult[] = [];
  status: string | null = null;

  setLive(resp: SegmentResponse): void {
    this.live = resp;
    this.status = null;
  }

  /** A failed request keeps the last good contour and surfaces a message. */
  fail(message: string): void {
    this.status = message;
  }

  /** Click: freeze the current live contour; no-op when there is none. */
  freeze(): FrozenResult | null {
    if (!this.live) return null;
    const item: FrozenResult = {
      seed: this.live.seed,
      points: this.live.points.map((p) => [p[0], p[1]] as [number, number]),
      diameter_mm: this.live.diameter_mm,
    };
    this.frozen.push(item);
    return item;
  }

  clearFrozen(): void {
    this.frozen = [];
  }
}
