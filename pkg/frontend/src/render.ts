/** Canvas drawing: grayscale image, contour dots, seed dots, frozen overlays. */

import { PgmImage } from "./pgm.js";
import { FrozenResult } from "./state.js";
import { SegmentResponse } from "./tracker.js";

export class Renderer {
  private readonly ctx: CanvasRenderingContext2D;
  private imageBitmap: HTMLCanvasElement | null = null;
  zoom = 1;

  constructor(private readonly canvas: HTMLCanvasElement) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("2d canvas context unavailable");
    this.ctx = ctx;
  }

  setImage(image: PgmImage): void {
    const off = document.createElement("canvas");
    off.width = image.width;
    off.height = image.height;
    const offCtx = off.getContext("2d")!;
    const data = offCtx.createImageData(image.width, image.height);
    for (let i = 0; i < image.pixels.length; i++) {
      const v = image.pixels[i];
      data.data[4 * i] = v;
      data.data[4 * i + 1] = v;
      data.data[4 * i + 2] = v;
      data.data[4 * i + 3] = 255;
    }
    offCtx.putImageData(data, 0, 0);
    this.imageBitmap = off;
    this.resize();
  }

  setZoom(zoom: number): void {
    this.zoom = zoom;
    this.resize();
  }

  private resize(): void {
    if (!this.imageBitmap) return;
    this.canvas.width = this.imageBitmap.width * this.zoom;
    this.canvas.height = this.imageBitmap.height * this.zoom;
  }

  /** Canvas pixel -> image coordinate. */
  toImage(x: number, y: number): [number, number] {
    return [x / this.zoom, y / this.zoom];
  }

  draw(
    live: SegmentResponse | null,
    frozen: FrozenResult[],
    templatePreview: { seed: [number, number]; radius: number } | null,
  ): void {
    if (!this.imageBitmap) return;
    const z = this.zoom;
    const ctx = this.ctx;
    ctx.imageSmoothingEnabled = false;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    ctx.drawImage(this.imageBitmap, 0, 0, this.canvas.width, this.canvas.height);

    if (templatePreview) {
      ctx.strokeStyle = "rgba(120, 180, 255, 0.5)";
      ctx.lineWidth = 1;
      ctx.beginPath();
      ctx.arc(
        templatePreview.seed[0] * z,
        templatePreview.seed[1] * z,
        templatePreview.radius * z,
        0,
        2 * Math.PI,
      );
      ctx.stroke();
    }

    for (const item of frozen) {
      this.drawDots(item.points, "#ffb347", 1.6);
      this.drawSeed(item.seed, "#ffe8c2");
      this.drawLabel(item.seed, `${item.diameter_mm.toFixed(1)} mm`, "#ffb347");
    }

    if (live) {
      this.drawDots(live.points, "#ff3030", 2.0);
      this.drawSeed(live.seed, "#ffffff");
      this.drawLabel(live.seed, `${live.diameter_mm.toFixed(1)} mm`, "#ffffff");
    }
  }

  private drawDots(points: [number, number][], color: string, size: number): void {
    const z = this.zoom;
    this.ctx.fillStyle = color;
    for (const [x, y] of points) {
      this.ctx.beginPath();
      this.ctx.arc(x * z, y * z, size, 0, 2 * Math.PI);
      this.ctx.fill();
    }
  }

  private drawSeed(seed: [number, number], color: string): void {
    const z = this.zoom;
    this.ctx.fillStyle = color;
    this.ctx.beginPath();
    this.ctx.arc(seed[0] * z, seed[1] * z, 3, 0, 2 * Math.PI);
    this.ctx.fill();
  }

  private drawLabel(seed: [number, number], text: string, color: string): void {
    const z = this.zoom;
    this.ctx.font = "12px sans-serif";
    this.ctx.fillStyle = color;
    this.ctx.fillText(text, seed[0] * z + 8, seed[1] * z - 8);
  }
}
