/** SVG writer: serializes draw operations into a standalone SVG document.
 *
 * Coordinates are emitted with fixed precision and attributes in a fixed
 * order, so the same operations always yield byte-identical markup.
 */

import { DrawOp, MarkerShape } from "./draw.js";

const FONT_STACK = "Helvetica, Arial, sans-serif";

function n(v: number): string {
  const r = Math.round(v * 100) / 100;
  return Object.is(r, -0) ? "0" : String(r);
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

function dashAttr(dash?: number[]): string {
  return dash && dash.length > 0
    ? ` stroke-dasharray="${dash.map(n).join(" ")}"`
    : "";
}

function markerPath(shape: MarkerShape, x: number, y: number, s: number): string {
  switch (shape) {
    case "circle":
      return (
        `M ${n(x - s)} ${n(y)} ` +
        `a ${n(s)} ${n(s)} 0 1 0 ${n(2 * s)} 0 ` +
        `a ${n(s)} ${n(s)} 0 1 0 ${n(-2 * s)} 0 Z`
      );
    case "square":
      return `M ${n(x - s)} ${n(y - s)} H ${n(x + s)} V ${n(y + s)} H ${n(x - s)} Z`;
    case "diamond":
      return `M ${n(x)} ${n(y - s)} L ${n(x + s)} ${n(y)} L ${n(x)} ${n(y + s)} L ${n(x - s)} ${n(y)} Z`;
    case "triangle":
      return `M ${n(x)} ${n(y - s)} L ${n(x + s)} ${n(y + s)} L ${n(x - s)} ${n(y + s)} Z`;
  }
}

export function toSvg(ops: DrawOp[], width: number, height: number): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}">`,
  ];
  for (const op of ops) {
    switch (op.kind) {
      case "rect":
        parts.push(
          `<rect x="${n(op.x)}" y="${n(op.y)}" width="${n(op.w)}" height="${n(op.h)}" ` +
            `fill="${op.fill}"/>`,
        );
        break;
      case "line":
        parts.push(
          `<line x1="${n(op.x1)}" y1="${n(op.y1)}" x2="${n(op.x2)}" y2="${n(op.y2)}" ` +
            `stroke="${op.color}" stroke-width="${n(op.width)}"${dashAttr(op.dash)}/>`,
        );
        break;
      case "polyline":
        parts.push(
          `<polyline points="${op.points.map(([x, y]) => `${n(x)},${n(y)}`).join(" ")}" ` +
            `fill="none" stroke="${op.color}" stroke-width="${n(op.width)}"` +
            `${dashAttr(op.dash)} stroke-linejoin="round"/>`,
        );
        break;
      case "polygon":
        parts.push(
          `<polygon points="${op.points.map(([x, y]) => `${n(x)},${n(y)}`).join(" ")}" ` +
            `fill="${op.fill}" fill-opacity="${n(op.opacity)}" stroke="none"/>`,
        );
        break;
      case "marker":
        parts.push(
          `<path d="${markerPath(op.shape, op.x, op.y, op.size)}" fill="${op.color}"/>`,
        );
        break;
      case "text": {
        const transform = op.rotated
          ? ` transform="rotate(-90 ${n(op.x)} ${n(op.y)})"`
          : "";
        parts.push(
          `<text x="${n(op.x)}" y="${n(op.y)}" font-family="${FONT_STACK}" ` +
            `font-size="${n(op.size)}" fill="${op.color}" ` +
            `text-anchor="${op.anchor}"${transform}>${esc(op.text)}</text>`,
        );
        break;
      }
    }
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
