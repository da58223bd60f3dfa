/** Request sequencing for the live segmentation loop.
 *
 * Guarantees: at most one request in flight; while one is pending the newest
 * cursor position replaces any queued one; a response is delivered only if no
 * newer request has been dispatched since (stale responses are dropped, even
 * when a stuck request is abandoned via the takeover timeout).
 */

import { TemplateConfig } from "./config.js";

export interface SegmentResponse {
  seed: [number, number];
  points: [number, number][];
  diameter_mm: number;
  area_mm2: number;
  elapsed_ms: number;
  cut_indices: number[];
}

export type SegmentSender = (
  seed: [number, number],
  cfg: TemplateConfig,
) => Promise<SegmentResponse>;

interface QueuedRequest {
  seed: [number, number];
  cfg: TemplateConfig;
}

export interface TrackerOptions {
  /** Abandon an unanswered request after this long and let a newer one go out. */
  takeoverMs?: number;
  now?: () => number;
}

export class SegmentLoop {
  onResult: (resp: SegmentResponse) => void = () => {};
  onError: (message: string) => void = () => {};

  private seq = 0;
  private inFlight = false;
  private startedAt = 0;
  private pending: QueuedRequest | null = null;
  private readonly takeoverMs: number;
  private readonly now: () => number;

  constructor(
    private readonly send: SegmentSender,
    options: TrackerOptions = {},
  ) {
    this.takeoverMs = options.takeoverMs ?? 2000;
    this.now = options.now ?? (() => Date.now());
  }

  get busy(): boolean {
    return this.inFlight;
  }

  request(seed: [number, number], cfg: TemplateConfig): void {
    if (this.inFlight && this.now() - this.startedAt <= this.takeoverMs) {
      this.pending = { seed, cfg };
      return;
    }
    void this.dispatch(seed, cfg);
  }

  private async dispatch(seed: [number, number], cfg: TemplateConfig): Promise<void> {
    const id = ++this.seq;
    this.inFlight = true;
    this.startedAt = this.now();
    try {
      const resp = await this.send(seed, cfg);
      if (id === this.seq) this.onResult(resp);
    } catch (err) {
      if (id === this.seq) this.onError(err instanceof Error ? err.message : String(err));
    } finally {
      if (id === this.seq) {
        this.inFlight = false;
        const next = this.pending;
        this.pending = null;
        if (next) void this.dispatch(next.seed, next.cfg);
      }
    }
  }
}
