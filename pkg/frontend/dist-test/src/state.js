/** Viewer state: the live contour, frozen results, and the status banner. */
export class ViewerModel {
    constructor() {
        this.live = null;
        this.frozen = [];
        this.status = null;
    }
    setLive(resp) {
        this.live = resp;
        this.status = null;
    }
    /** A failed request keeps the last good contour and surfaces a message. */
    fail(message) {
        this.status = message;
    }
    /** Click: freeze the current live contour; no-op when there is none. */
    freeze() {
        if (!this.live)
            return null;
        const item = {
            seed: this.live.seed,
            points: this.live.points.map((p) => [p[0], p[1]]),
            diameter_mm: this.live.diameter_mm,
        };
        this.frozen.push(item);
        return item;
    }
    clearFrozen() {
        this.frozen = [];
    }
}
