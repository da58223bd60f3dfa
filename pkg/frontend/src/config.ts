/** Template configuration carried on every segment request. */

export interface TemplateConfig {
  rays: number;
  nodes: number;
  radius_px: number;
  delta: number;
}

export const DEFAULT_CONFIG: TemplateConfig = {
  rays: 60,
  nodes: 40,
  radius_px: 80,
  delta: 2,
};

/** Largest smoothness step the node count admits. */
export function maxDelta(cfg: Pick<TemplateConfig, "nodes">): number {
  return cfg.nodes - 2;
}

export function isValid(cfg: TemplateConfig): boolean {
  return (
    cfg.rays >= 3 &&
    cfg.nodes >= 3 &&
    cfg.radius_px > 0 &&
    cfg.delta >= 0 &&
    cfg.delta <= maxDelta(cfg)
  );
}

/** Clamp delta into range after a nodes/delta edit; other fields pass through. */
export function normalize(cfg: TemplateConfig): TemplateConfig {
  const delta = Math.min(Math.max(cfg.delta, 0), Math.max(0, maxDelta(cfg)));
  return { ...cfg, delta };
}
