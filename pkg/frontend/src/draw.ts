/** Backend-neutral plot layout.
 *
 * A PlotModel (data + scales + annotations) is flattened into primitive
 * draw operations; the SVG and PNG writers consume the same operation list,
 * which keeps the two output formats structurally identical.
 */

import { Scale } from "./scale.js";

export type MarkerShape = "circle" | "square" | "diamond" | "triangle";
export type Anchor = "start" | "middle" | "end";

export interface LineOp {
  kind: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  color: string;
  width: number;
  dash?: number[];
}

export interface PolylineOp {
  kind: "polyline";
  points: Array<[number, number]>;
  color: string;
  width: number;
  dash?: number[];
}

export interface PolygonOp {
  kind: "polygon";
  points: Array<[number, number]>;
  fill: string;
  opacity: number;
}

export interface RectOp {
  kind: "rect";
  x: number;
  y: number;
  w: number;
  h: number;
  fill: string;
}

export interface TextOp {
  kind: "text";
  x: number;
  y: number;
  text: string;
  size: number;
  color: string;
  anchor: Anchor;
  rotated?: boolean; // 90 degrees counter-clockwise about (x, y)
}

export interface MarkerOp {
  kind: "marker";
  x: number;
  y: number;
  shape: MarkerShape;
  size: number;
  color: string;
}

export type DrawOp = LineOp | PolylineOp | PolygonOp | RectOp | TextOp | MarkerOp;

export interface SeriesData {
  label: string;
  xs: number[];
  ys: number[];
  color: string;
  width?: number;
  dash?: number[];
  marker?: MarkerShape;
}

export interface RegionData {
  label: string;
  points: Array<[number, number]>; // frontier in data space, region fills to zero
  color: string;
  fillOpacity: number;
  dash?: number[];
}

export interface PointData {
  x: number;
  y: number;
  label?: string;
  shape: MarkerShape;
  color: string;
}

export interface HLineData {
  y: number;
  label: string;
  color: string;
  dash: number[];
}

export interface PlotModel {
  title: string;
  xLabel: string;
  yLabel: string;
  x: Scale;
  y: Scale;
  series: SeriesData[];
  regions: RegionData[];
  hlines: HLineData[];
  points: PointData[];
  width: number;
  height: number;
}

export const MARGIN = { left: 72, right: 24, top: 42, bottom: 56 };
const TICK_LEN = 5;
const CHAR_ASPECT = 0.62; // approximate glyph width as a fraction of size

export function textWidth(text: string, size: number): number {
  return text.length * size * CHAR_ASPECT;
}

export function layout(model: PlotModel): DrawOp[] {
  const { width: w, height: h } = model;
  const px = (v: number) =>
    MARGIN.left + model.x.unit(v) * (w - MARGIN.left - MARGIN.right);
  const py = (v: number) =>
    h - MARGIN.bottom - model.y.unit(v) * (h - MARGIN.top - MARGIN.bottom);
  const x0 = MARGIN.left;
  const x1 = w - MARGIN.right;
  const y0 = h - MARGIN.bottom;
  const y1 = MARGIN.top;

  const ops: DrawOp[] = [];
  ops.push({ kind: "rect", x: 0, y: 0, w, h, fill: "#ffffff" });

  // grid
  for (const t of model.x.ticks()) {
    const x = px(t.value);
    ops.push({ kind: "line", x1: x, y1: y0, x2: x, y2: y1, color: "#e3e3e3", width: 1 });
  }
  for (const t of model.y.ticks()) {
    const y = py(t.value);
    ops.push({ kind: "line", x1: x0, y1: y, x2: x1, y2: y, color: "#e3e3e3", width: 1 });
  }

  // shaded regions: frontier polyline closed down to the zero-rate axes
  for (const region of model.regions) {
    const pts = [...region.points].sort((a, b) => a[0] - b[0]);
    if (pts.length >= 2) {
      const poly: Array<[number, number]> = [
        [px(model.x.min), py(model.y.min)],
        [px(model.x.min), py(pts[0]![1])],
        ...pts.map(([cx, cy]): [number, number] => [px(cx), py(cy)]),
        [px(pts[pts.length - 1]![0]), py(model.y.min)],
      ];
      ops.push({
        kind: "polygon",
        points: poly,
        fill: region.color,
        opacity: region.fillOpacity,
      });
      ops.push({
        kind: "polyline",
        points: pts.map(([cx, cy]): [number, number] => [px(cx), py(cy)]),
        color: region.color,
        width: 2,
        ...(region.dash ? { dash: region.dash } : {}),
      });
    }
  }

  for (const hl of model.hlines) {
    ops.push({
      kind: "line",
      x1: x0,
      y1: py(hl.y),
      x2: x1,
      y2: py(hl.y),
      color: hl.color,
      width: 1.5,
      dash: hl.dash,
    });
  }

  for (const s of model.series) {
    const pts = s.xs.map((vx, i): [number, number] => [px(vx), py(s.ys[i]!)]);
    ops.push({
      kind: "polyline",
      points: pts,
      color: s.color,
      width: s.width ?? 2,
      ...(s.dash ? { dash: s.dash } : {}),
    });
    if (s.marker) {
      for (const [mx, my] of pts) {
        ops.push({ kind: "marker", x: mx, y: my, shape: s.marker, size: 4, color: s.color });
      }
    }
  }

  for (const p of model.points) {
    ops.push({
      kind: "marker",
      x: px(p.x),
      y: py(p.y),
      shape: p.shape,
      size: 5,
      color: p.color,
    });
    if (p.label) {
      ops.push({
        kind: "text",
        x: px(p.x) + 8,
        y: py(p.y) - 6,
        text: p.label,
        size: 10,
        color: "#333333",
        anchor: "start",
      });
    }
  }

  // frame
  ops.push({ kind: "line", x1: x0, y1: y0, x2: x1, y2: y0, color: "#222222", width: 1.5 });
  ops.push({ kind: "line", x1: x0, y1: y0, x2: x0, y2: y1, color: "#222222", width: 1.5 });
  ops.push({ kind: "line", x1: x0, y1: y1, x2: x1, y2: y1, color: "#222222", width: 1 });
  ops.push({ kind: "line", x1: x1, y1: y0, x2: x1, y2: y1, color: "#222222", width: 1 });

  // ticks + labels
  for (const t of model.x.ticks()) {
    const x = px(t.value);
    ops.push({ kind: "line", x1: x, y1: y0, x2: x, y2: y0 + TICK_LEN, color: "#222222", width: 1 });
    ops.push({
      kind: "text", x, y: y0 + TICK_LEN + 12, text: t.label, size: 10,
      color: "#222222", anchor: "middle",
    });
  }
  for (const t of model.y.ticks()) {
    const y = py(t.value);
    ops.push({ kind: "line", x1: x0 - TICK_LEN, y1: y, x2: x0, y2: y, color: "#222222", width: 1 });
    ops.push({
      kind: "text", x: x0 - TICK_LEN - 4, y: y + 4, text: t.label, size: 10,
      color: "#222222", anchor: "end",
    });
  }

  ops.push({
    kind: "text", x: (x0 + x1) / 2, y: h - 14, text: model.xLabel, size: 12,
    color: "#111111", anchor: "middle",
  });
  ops.push({
    kind: "text", x: 18, y: (y0 + y1) / 2, text: model.yLabel, size: 12,
    color: "#111111", anchor: "middle", rotated: true,
  });
  ops.push({
    kind: "text", x: (x0 + x1) / 2, y: 24, text: model.title, size: 14,
    color: "#111111", anchor: "middle",
  });

  ops.push(...legendOps(model, x0, x1, y1));
  return ops;
}

function legendOps(model: PlotModel, x0: number, x1: number, yTop: number): DrawOp[] {
  interface Entry {
    label: string;
    color: string;
    dash?: number[];
    marker?: MarkerShape;
    swatch?: boolean;
  }
  const entries: Entry[] = [];
  for (const r of model.regions) {
    entries.push({ label: r.label, color: r.color, swatch: true });
  }
  for (const s of model.series) {
    entries.push({
      label: s.label, color: s.color,
      ...(s.dash ? { dash: s.dash } : {}),
      ...(s.marker ? { marker: s.marker } : {}),
    });
  }
  for (const hl of model.hlines) {
    entries.push({ label: hl.label, color: hl.color, dash: hl.dash });
  }
  if (entries.length === 0) return [];

  const size = 10;
  const rowH = 15;
  const sample = 26;
  const pad = 8;
  const boxW =
    sample + 6 + Math.max(...entries.map((e) => textWidth(e.label, size))) + 2 * pad;
  const boxH = entries.length * rowH + 2 * pad - 4;
  const bx = x1 - boxW - 10;
  const by = yTop + 10;

  const ops: DrawOp[] = [
    { kind: "rect", x: bx, y: by, w: boxW, h: boxH, fill: "#ffffff" },
    { kind: "line", x1: bx, y1: by, x2: bx + boxW, y2: by, color: "#999999", width: 1 },
    { kind: "line", x1: bx, y1: by + boxH, x2: bx + boxW, y2: by + boxH, color: "#999999", width: 1 },
    { kind: "line", x1: bx, y1: by, x2: bx, y2: by + boxH, color: "#999999", width: 1 },
    { kind: "line", x1: bx + boxW, y1: by, x2: bx + boxW, y2: by + boxH, color: "#999999", width: 1 },
  ];
  entries.forEach((e, i) => {
    const cy = by + pad + i * rowH + 4;
    if (e.swatch) {
      ops.push({
        kind: "polygon",
        points: [
          [bx + pad, cy - 5], [bx + pad + sample, cy - 5],
          [bx + pad + sample, cy + 3], [bx + pad, cy + 3],
        ],
        fill: e.color,
        opacity: 0.35,
      });
    } else {
      ops.push({
        kind: "line", x1: bx + pad, y1: cy, x2: bx + pad + sample, y2: cy,
        color: e.color, width: 2, ...(e.dash ? { dash: e.dash } : {}),
      });
      if (e.marker) {
        ops.push({
          kind: "marker", x: bx + pad + sample / 2, y: cy,
          shape: e.marker, size: 4, color: e.color,
        });
      }
    }
    ops.push({
      kind: "text", x: bx + pad + sample + 6, y: cy + 4, text: e.label,
      size, color: "#222222", anchor: "start",
    });
  });
  return ops;
}
