/** Figure catalog: which CSV columns each figure plots and how.
 *
 * Every spec names its input CSV(s) and a series-to-column mapping; the
 * compose step validates the columns against the files in the run
 * directory and produces a backend-neutral plot model.
 */

import { join } from "node:path";

import { readTable, Table } from "./csv.js";
import { MarkerShape, PlotModel, PointData, RegionData, SeriesData } from "./draw.js";
import { autoScale } from "./scale.js";

export const COLORS = {
  accurate: "#1f77b4",
  nopolar: "#d62728",
  upw: "#2ca02c",
  usw: "#ff7f0e",
  nusw: "#9467bd",
  fdsac: "#8c564b",
  cc: "#1f77b4",
  sc: "#d62728",
  inner: "#2ca02c",
  gray: "#555555",
  dark: "#222222",
} as const;

export interface LineSeriesSpec {
  column: string;
  label: string;
  color: string;
  dash?: number[];
  marker?: MarkerShape;
}

export interface LimitSpec {
  column: string; // constant column: first value is drawn as a dashed rule
  label: string;
  color: string;
}

export interface LineFigureSpec {
  kind: "lines";
  id: string;
  title: string;
  csv: string;
  x: { column: string; label: string; scale: "linear" | "log" };
  yLabel: string;
  series: LineSeriesSpec[];
  limits?: LimitSpec[];
}

export interface FrontierSpec {
  csv: string;
  sr: string;
  cr: string;
  label: string;
  color: string;
  fillOpacity: number;
  dash?: number[];
}

export interface RegionFigureSpec {
  kind: "region";
  id: string;
  title: string;
  frontiers: FrontierSpec[];
  corners: { csv: string; tag: string; sr: string; cr: string };
}

export type FigureSpec = LineFigureSpec | RegionFigureSpec;

const CR_LABEL = "communication rate (bits/s/Hz)";
const SR_LABEL = "sensing rate (bits/s/Hz)";
const N_LABEL = "number of elements N";

const MODELS: Array<{ key: keyof typeof COLORS & string; label: string; marker?: MarkerShape }> = [
  { key: "accurate", label: "accurate", marker: "circle" },
  { key: "nopolar", label: "no polarization loss", marker: "square" },
  { key: "upw", label: "planar wave", marker: "diamond" },
  { key: "usw", label: "spherical wave", marker: "triangle" },
  { key: "nusw", label: "non-uniform spherical" },
];

function modelSeries(prefix: string): LineSeriesSpec[] {
  return MODELS.map((m) => ({
    column: `${prefix}_${m.key}`,
    label: m.label,
    color: COLORS[m.key],
    ...(m.marker ? { marker: m.marker } : {}),
  }));
}

const DESIGN_LABELS: Record<string, string> = {
  cc: "C-C order",
  sc: "S-C order",
};

function ulModelSeries(prefix: string, first: string, second: string): LineSeriesSpec[] {
  const out: LineSeriesSpec[] = [];
  for (const m of MODELS) {
    out.push({
      column: `${prefix}_${first}_${m.key}`,
      label: `${DESIGN_LABELS[first]}, ${m.label}`,
      color: COLORS[m.key],
    });
    out.push({
      column: `${prefix}_${second}_${m.key}`,
      label: `${DESIGN_LABELS[second]}, ${m.label}`,
      color: COLORS[m.key],
      dash: [5, 3],
    });
  }
  return out;
}

export const FIGURES: FigureSpec[] = [
  {
    kind: "lines",
    id: "fig2",
    title: "Channel correlation factor versus array size",
    csv: "ccf.csv",
    x: { column: "N", label: N_LABEL, scale: "log" },
    yLabel: "channel correlation factor",
    series: [
      { column: "rho_accurate", label: "accurate", color: COLORS.accurate, marker: "circle" },
      { column: "rho_nopolar", label: "no polarization loss", color: COLORS.nopolar, marker: "square" },
    ],
  },
  {
    kind: "lines",
    id: "fig3a",
    title: "Downlink communication rate versus SNR",
    csv: "dl_snr.csv",
    x: { column: "p_dB", label: "transmit SNR p (dB)", scale: "linear" },
    yLabel: CR_LABEL,
    series: [
      { column: "CR_cc", label: "C-C design", color: COLORS.cc },
      { column: "CR_sc", label: "S-C design", color: COLORS.sc },
      { column: "CR_fdsac", label: "FDSAC", color: COLORS.fdsac },
      { column: "CR_cc_hiSNR", label: "C-C high-SNR", color: COLORS.gray, dash: [6, 3] },
      { column: "CR_sc_hiSNR", label: "S-C high-SNR", color: COLORS.gray, dash: [2, 3] },
    ],
  },
  {
    kind: "lines",
    id: "fig3b",
    title: "Downlink sensing rate versus SNR",
    csv: "dl_snr.csv",
    x: { column: "p_dB", label: "transmit SNR p (dB)", scale: "linear" },
    yLabel: SR_LABEL,
    series: [
      { column: "SR_sc", label: "S-C design", color: COLORS.sc },
      { column: "SR_cc", label: "C-C design", color: COLORS.cc },
      { column: "SR_fdsac", label: "FDSAC", color: COLORS.fdsac },
      { column: "SR_sc_hiSNR", label: "S-C high-SNR", color: COLORS.gray, dash: [6, 3] },
      { column: "SR_cc_hiSNR", label: "C-C high-SNR", color: COLORS.gray, dash: [2, 3] },
    ],
  },
  {
    kind: "lines",
    id: "fig5a",
    title: "Downlink communication rate versus array size",
    csv: "dl_n_cr.csv",
    x: { column: "N", label: N_LABEL, scale: "log" },
    yLabel: CR_LABEL,
    series: modelSeries("CR_cc"),
    limits: [
      { column: "CR_limit_accurate", label: "limit, accurate", color: COLORS.accurate },
      { column: "CR_limit_nopolar", label: "limit, no polar loss", color: COLORS.nopolar },
    ],
  },
  {
    kind: "lines",
    id: "fig5b",
    title: "Downlink sensing rate versus array size",
    csv: "dl_n_sr.csv",
    x: { column: "N", label: N_LABEL, scale: "log" },
    yLabel: SR_LABEL,
    series: modelSeries("SR_sc"),
    limits: [
      { column: "SR_limit_accurate", label: "limit, accurate", color: COLORS.accurate },
      { column: "SR_limit_nopolar", label: "limit, no polar loss", color: COLORS.nopolar },
    ],
  },
  {
    kind: "region",
    id: "fig6",
    title: "Downlink rate region",
    frontiers: [
      {
        csv: "dl_region_isac.csv", sr: "SR", cr: "CR",
        label: "ISAC", color: COLORS.cc, fillOpacity: 0.22,
      },
      {
        csv: "dl_region_fdsac.csv", sr: "SR", cr: "CR",
        label: "FDSAC", color: COLORS.fdsac, fillOpacity: 0.35,
      },
    ],
    corners: { csv: "dl_region_corners.csv", tag: "design", sr: "SR", cr: "CR" },
  },
  {
    kind: "lines",
    id: "fig7a",
    title: "Downlink communication rate versus distance",
    csv: "dl_r_cr.csv",
    x: { column: "r", label: "sensing distance r (m), user at 2r", scale: "log" },
    yLabel: CR_LABEL,
    series: modelSeries("CR_cc"),
  },
  {
    kind: "lines",
    id: "fig7b",
    title: "Downlink sensing rate versus distance",
    csv: "dl_r_sr.csv",
    x: { column: "r", label: "sensing distance r (m), user at 2r", scale: "log" },
    yLabel: SR_LABEL,
    series: modelSeries("SR_sc"),
  },
  {
    kind: "lines",
    id: "fig8a",
    title: "Uplink communication rate versus array size",
    csv: "ul_n_cr.csv",
    x: { column: "N", label: N_LABEL, scale: "log" },
    yLabel: CR_LABEL,
    series: [
      ...ulModelSeries("CR", "cc", "sc"),
      {
        column: "CR_sc_lower_accurate", label: "worst-case bound, accurate",
        color: COLORS.dark, dash: [2, 2],
      },
    ],
    limits: [
      { column: "CR_limit_accurate", label: "limit, accurate", color: COLORS.accurate },
      { column: "CR_limit_nopolar", label: "limit, no polar loss", color: COLORS.nopolar },
      { column: "CR_sc_lower_limit", label: "bound limit", color: COLORS.dark },
    ],
  },
  {
    kind: "lines",
    id: "fig8b",
    title: "Uplink sensing rate versus array size",
    csv: "ul_n_sr.csv",
    x: { column: "N", label: N_LABEL, scale: "log" },
    yLabel: SR_LABEL,
    series: [
      ...ulModelSeries("SR", "sc", "cc"),
      {
        column: "SR_cc_lower_accurate", label: "worst-case bound, accurate",
        color: COLORS.dark, dash: [2, 2],
      },
    ],
    limits: [
      { column: "SR_limit_accurate", label: "limit, accurate", color: COLORS.accurate },
      { column: "SR_limit_nopolar", label: "limit, no polar loss", color: COLORS.nopolar },
      { column: "SR_cc_lower_limit", label: "bound limit", color: COLORS.dark },
    ],
  },
  {
    kind: "lines",
    id: "fig9a",
    title: "Uplink communication rate versus communication SNR",
    csv: "ul_snr_cr.csv",
    x: { column: "p_c_dB", label: "communication SNR p_c (dB)", scale: "linear" },
    yLabel: CR_LABEL,
    series: [
      { column: "CR_cc", label: "C-C order (no interference)", color: COLORS.cc },
      { column: "CR_sc", label: "S-C order (exact)", color: COLORS.sc },
      { column: "CR_sc_lower", label: "S-C worst-case bound", color: COLORS.sc, dash: [4, 3] },
      { column: "CR_fdsac", label: "FDSAC", color: COLORS.fdsac },
    ],
  },
  {
    kind: "lines",
    id: "fig9b",
    title: "Uplink sensing rate versus sensing SNR",
    csv: "ul_snr_sr.csv",
    x: { column: "p_s_dB", label: "sensing SNR p_s (dB)", scale: "linear" },
    yLabel: SR_LABEL,
    series: [
      { column: "SR_sc", label: "S-C order (no interference)", color: COLORS.sc },
      { column: "SR_cc", label: "C-C order (exact)", color: COLORS.cc },
      { column: "SR_cc_lower", label: "C-C worst-case bound", color: COLORS.cc, dash: [4, 3] },
      { column: "SR_fdsac", label: "FDSAC", color: COLORS.fdsac },
    ],
  },
  {
    kind: "region",
    id: "fig10",
    title: "Uplink rate region",
    frontiers: [
      {
        csv: "ul_region_isac.csv", sr: "SR", cr: "CR",
        label: "ISAC time-sharing", color: COLORS.cc, fillOpacity: 0.18,
      },
      {
        csv: "ul_region_inner.csv", sr: "SR", cr: "CR",
        label: "ISAC inner bound", color: COLORS.inner, fillOpacity: 0.18, dash: [5, 3],
      },
      {
        csv: "ul_region_fdsac.csv", sr: "SR", cr: "CR",
        label: "FDSAC", color: COLORS.fdsac, fillOpacity: 0.35,
      },
    ],
    corners: { csv: "ul_region_corners.csv", tag: "design", sr: "SR", cr: "CR" },
  },
];

export function figureIds(): string[] {
  return FIGURES.map((f) => f.id);
}

export function findFigure(id: string): FigureSpec | undefined {
  return FIGURES.find((f) => f.id === id);
}

/** Every CSV file the figure reads, relative to the run directory. */
export function figureInputs(spec: FigureSpec): string[] {
  if (spec.kind === "lines") return [spec.csv];
  return [...spec.frontiers.map((f) => f.csv), spec.corners.csv];
}

const WIDTH = 960;
const HEIGHT = 660;
const CORNER_SHAPES: MarkerShape[] = ["circle", "square", "diamond", "triangle"];

export function composeFigure(spec: FigureSpec, runDir: string): PlotModel {
  return spec.kind === "lines"
    ? composeLines(spec, readTable(join(runDir, spec.csv)))
    : composeRegion(spec, runDir);
}

function composeLines(spec: LineFigureSpec, table: Table): PlotModel {
  const xs = table.numbers(spec.x.column);
  const series: SeriesData[] = spec.series.map((s) => ({
    label: s.label,
    xs,
    ys: table.numbers(s.column),
    color: s.color,
    ...(s.dash ? { dash: s.dash } : {}),
    ...(s.marker ? { marker: s.marker } : {}),
  }));
  const hlines = (spec.limits ?? []).map((lim) => ({
    y: table.numbers(lim.column)[0]!,
    label: lim.label,
    color: lim.color,
    dash: [8, 4],
  }));
  const yValues = [...series.flatMap((s) => s.ys), ...hlines.map((h) => h.y)];
  return {
    title: spec.title,
    xLabel: spec.x.label,
    yLabel: spec.yLabel,
    x: autoScale(xs, spec.x.scale),
    y: autoScale(yValues, "linear"),
    series,
    regions: [],
    hlines,
    points: [],
    width: WIDTH,
    height: HEIGHT,
  };
}

function composeRegion(spec: RegionFigureSpec, runDir: string): PlotModel {
  const regions: RegionData[] = spec.frontiers.map((f) => {
    const table = readTable(join(runDir, f.csv));
    const crs = table.numbers(f.cr);
    const srs = table.numbers(f.sr);
    return {
      label: f.label,
      points: crs.map((c, i): [number, number] => [c, srs[i]!]),
      color: f.color,
      fillOpacity: f.fillOpacity,
      ...(f.dash ? { dash: f.dash } : {}),
    };
  });
  const cornerTable = readTable(join(runDir, spec.corners.csv));
  const tags = cornerTable.strings(spec.corners.tag);
  const cornerCr = cornerTable.numbers(spec.corners.cr);
  const cornerSr = cornerTable.numbers(spec.corners.sr);
  const points: PointData[] = tags.map((tag, i) => ({
    x: cornerCr[i]!,
    y: cornerSr[i]!,
    label: tag,
    shape: CORNER_SHAPES[i % CORNER_SHAPES.length]!,
    color: COLORS.dark,
  }));
  const allCr = [0, ...regions.flatMap((r) => r.points.map((p) => p[0])), ...cornerCr];
  const allSr = [0, ...regions.flatMap((r) => r.points.map((p) => p[1])), ...cornerSr];
  return {
    title: spec.title,
    xLabel: CR_LABEL,
    yLabel: SR_LABEL,
    x: autoScale(allCr, "linear"),
    y: autoScale(allSr, "linear"),
    series: [],
    regions,
    hlines: [],
    points,
    width: WIDTH,
    height: HEIGHT,
  };
}
