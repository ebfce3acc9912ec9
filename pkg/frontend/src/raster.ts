/** PNG writer: rasterizes draw operations onto an RGBA byte canvas.
 *
 * Rendering is pure integer/float arithmetic over a Buffer — no system
 * fonts, no timestamps, no platform rasterizer — so identical operation
 * lists produce identical PNG bytes.
 */

import { PNG } from "pngjs";

import { Anchor, DrawOp, MarkerShape } from "./draw.js";
import { ADVANCE, GLYPH_H, GLYPH_W, glyph } from "./font.js";

type Rgb = [number, number, number];

function parseColor(hex: string): Rgb {
  const m = /^#([0-9a-fA-F]{6})$/.exec(hex);
  if (!m) throw new RangeError(`expected #rrggbb color, got ${hex}`);
  const v = parseInt(m[1]!, 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly data: Buffer;

  constructor(width: number, height: number) {
    this.width = Math.round(width);
    this.height = Math.round(height);
    this.data = Buffer.alloc(this.width * this.height * 4, 0xff);
  }

  private blend(x: number, y: number, rgb: Rgb, alpha: number): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height || alpha <= 0) return;
    const i = (y * this.width + x) * 4;
    const a = Math.min(1, alpha);
    for (let c = 0; c < 3; c += 1) {
      this.data[i + c] = Math.round(rgb[c]! * a + this.data[i + c]! * (1 - a));
    }
    this.data[i + 3] = 0xff;
  }

  private disc(cx: number, cy: number, radius: number, rgb: Rgb, alpha: number): void {
    if (radius <= 0.5) {
      this.blend(Math.round(cx), Math.round(cy), rgb, alpha);
      return;
    }
    const r = radius;
    for (let y = Math.floor(cy - r); y <= Math.ceil(cy + r); y += 1) {
      for (let x = Math.floor(cx - r); x <= Math.ceil(cx + r); x += 1) {
        const d = Math.hypot(x - cx, y - cy);
        if (d <= r) this.blend(x, y, rgb, alpha);
        else if (d <= r + 0.7) this.blend(x, y, rgb, alpha * (r + 0.7 - d) / 0.7);
      }
    }
  }

  fillRect(x: number, y: number, w: number, h: number, color: string, alpha = 1): void {
    const rgb = parseColor(color);
    for (let yy = Math.round(y); yy < Math.round(y + h); yy += 1) {
      for (let xx = Math.round(x); xx < Math.round(x + w); xx += 1) {
        this.blend(xx, yy, rgb, alpha);
      }
    }
  }

  /** Stroke a segment by stamping discs along it, honoring a dash pattern. */
  line(
    x1: number, y1: number, x2: number, y2: number,
    color: string, width: number, dash?: number[], phase = 0,
  ): number {
    const rgb = parseColor(color);
    const len = Math.hypot(x2 - x1, y2 - y1);
    const steps = Math.max(1, Math.ceil(len * 2));
    const period = dash && dash.length > 0 ? dash.reduce((a, b) => a + b, 0) : 0;
    let travelled = phase;
    for (let s = 0; s <= steps; s += 1) {
      const t = s / steps;
      travelled = phase + t * len;
      let on = true;
      if (period > 0) {
        let pos = travelled % period;
        for (const seg of dash!) {
          if (pos < seg) break;
          pos -= seg;
          on = !on;
        }
      }
      if (on) {
        this.disc(x1 + t * (x2 - x1), y1 + t * (y2 - y1), width / 2, rgb, 1);
      }
    }
    return travelled;
  }

  polyline(points: Array<[number, number]>, color: string, width: number, dash?: number[]): void {
    let phase = 0;
    for (let i = 1; i < points.length; i += 1) {
      const [x1, y1] = points[i - 1]!;
      const [x2, y2] = points[i]!;
      phase = this.line(x1, y1, x2, y2, color, width, dash, phase);
    }
  }

  /** Even-odd scanline fill. */
  polygon(points: Array<[number, number]>, color: string, alpha: number): void {
    if (points.length < 3) return;
    const rgb = parseColor(color);
    const ys = points.map((p) => p[1]);
    const yMin = Math.max(0, Math.floor(Math.min(...ys)));
    const yMax = Math.min(this.height - 1, Math.ceil(Math.max(...ys)));
    for (let y = yMin; y <= yMax; y += 1) {
      const scan = y + 0.5;
      const a = points.map((p, i) => ({ p, q: points[(i + 1) % points.length]! }));
      const xs: number[] = [];
      for (const { p, q } of a) {
        const [px, py] = p;
        const [qx, qy] = q;
        if (py <= scan !== qy <= scan) {
          xs.push(px + ((scan - py) / (qy - py)) * (qx - px));
        }
      }
      xs.sort((u, v) => u - v);
      for (let k = 0; k + 1 < xs.length; k += 2) {
        const from = Math.max(0, Math.round(xs[k]!));
        const to = Math.min(this.width - 1, Math.round(xs[k + 1]!));
        for (let x = from; x <= to; x += 1) this.blend(x, y, rgb, alpha);
      }
    }
  }

  marker(x: number, y: number, shape: MarkerShape, size: number, color: string): void {
    const rgb = parseColor(color);
    switch (shape) {
      case "circle":
        this.disc(x, y, size, rgb, 1);
        return;
      case "square":
        this.fillRect(x - size, y - size, 2 * size, 2 * size, color);
        return;
      case "diamond":
        this.polygon(
          [[x, y - size - 1], [x + size + 1, y], [x, y + size + 1], [x - size - 1, y]],
          color, 1,
        );
        return;
      case "triangle":
        this.polygon(
          [[x, y - size - 1], [x + size + 1, y + size], [x - size - 1, y + size]],
          color, 1,
        );
        return;
    }
  }

  text(
    x: number, y: number, s: string, size: number, color: string,
    anchor: Anchor, rotated = false,
  ): void {
    const rgb = parseColor(color);
    const scale = Math.max(1, Math.round(size / 7));
    const total = s.length * ADVANCE * scale - scale;
    let shift = 0;
    if (anchor === "middle") shift = -total / 2;
    else if (anchor === "end") shift = -total;
    // glyph boxes hang above the baseline anchor (x, y)
    for (let ci = 0; ci < s.length; ci += 1) {
      const rows = glyph(s[ci]!);
      for (let gy = 0; gy < GLYPH_H; gy += 1) {
        for (let gx = 0; gx < GLYPH_W; gx += 1) {
          if (rows[gy]!.charAt(gx) !== "X") continue;
          for (let sy = 0; sy < scale; sy += 1) {
            for (let sx = 0; sx < scale; sx += 1) {
              const u = shift + ci * ADVANCE * scale + gx * scale + sx;
              const v = (gy - GLYPH_H) * scale + sy;
              if (rotated) {
                // rotate(-90) about (x, y): offset (u, v) lands at (x+v, y-u)
                this.blend(Math.round(x + v), Math.round(y - u), rgb, 1);
              } else {
                this.blend(Math.round(x + u), Math.round(y + v), rgb, 1);
              }
            }
          }
        }
      }
    }
  }

  toPng(): Buffer {
    const png = new PNG({ width: this.width, height: this.height });
    this.data.copy(png.data);
    return PNG.sync.write(png);
  }
}

export function rasterize(ops: DrawOp[], width: number, height: number): Buffer {
  const canvas = new Canvas(width, height);
  for (const op of ops) {
    switch (op.kind) {
      case "rect":
        canvas.fillRect(op.x, op.y, op.w, op.h, op.fill);
        break;
      case "line":
        canvas.line(op.x1, op.y1, op.x2, op.y2, op.color, op.width, op.dash);
        break;
      case "polyline":
        canvas.polyline(op.points, op.color, op.width, op.dash);
        break;
      case "polygon":
        canvas.polygon(op.points, op.fill, op.opacity);
        break;
      case "marker":
        canvas.marker(op.x, op.y, op.shape, op.size, op.color);
        break;
      case "text":
        canvas.text(op.x, op.y, op.text, op.size, op.color, op.anchor, op.rotated ?? false);
        break;
    }
  }
  return canvas.toPng();
}
