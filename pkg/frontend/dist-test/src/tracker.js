/** Request sequencing for the live segmentation loop.
 *
 * Guarantees: at most one request in flight; while one is pending the newest
 * cursor position replaces any queued one; a response is delivered only if no
 * newer request has been dispatched since (stale responses are dropped, even
 * when a stuck request is abandoned via the takeover timeout).
 */
export class SegmentLoop {
    constructor(send, options = {}) {
        this.send = send;
        this.onResult = () => { };
        this.onError = () => { };
        this.seq = 0;
        this.inFlight = false;
        this.startedAt = 0;
        this.pending = null;
        this.takeoverMs = options.takeoverMs ?? 2000;
        this.now = options.now ?? (() => Date.now());
    }
    get busy() {
        return this.inFlight;
    }
    request(seed, cfg) {
        if (this.inFlight && this.now() - this.startedAt <= this.takeoverMs) {
            this.pending = { seed, cfg };
            return;
        }
        void this.dispatch(seed, cfg);
    }
    async dispatch(seed, cfg) {
        const id = ++this.seq;
        this.inFlight = true;
        this.startedAt = this.now();
        try {
            const resp = await this.send(seed, cfg);
            if (id === this.seq)
                this.onResult(resp);
        }
        catch (err) {
            if (id === this.seq)
                this.onError(err instanceof Error ? err.message : String(err));
        }
        finally {
            if (id === this.seq) {
                this.inFlight = false;
                const next = this.pending;
                this.pending = null;
                if (next)
                    void this.dispatch(next.seed, next.cfg);
            }
        }
    }
}
