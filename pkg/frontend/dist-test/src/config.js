/** Template configuration carried on every segment request. */
export const DEFAULT_CONFIG = {
    rays: 60,
    nodes: 40,
    radius_px: 80,
    delta: 2,
};
/** Largest smoothness step the node count admits. */
export function maxDelta(cfg) {
    return cfg.nodes - 2;
}
export function isValid(cfg) {
    return (cfg.rays >= 3 &&
        cfg.nodes >= 3 &&
        cfg.radius_px > 0 &&
        cfg.delta >= 0 &&
        cfg.delta <= maxDelta(cfg));
}
/** Clamp delta into range after a nodes/delta edit; other fields pass through. */
export function normalize(cfg) {
    const delta = Math.min(Math.max(cfg.delta, 0), Math.max(0, maxDelta(cfg)));
    return { ...cfg, delta };
}
