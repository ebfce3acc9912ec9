/** Batch rendering: figure specs -> SVG + PNG files in <run-dir>/figures. */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { layout } from "./draw.js";
import { UnknownFigureError } from "./errors.js";
import { composeFigure, FigureSpec, figureIds, FIGURES, findFigure } from "./figures.js";
import { rasterize } from "./raster.js";
import { toSvg } from "./svg.js";

export interface RenderResult {
  id: string;
  svgPath: string;
  pngPath: string;
}

export interface RenderOptions {
  /** Restrict to these figure ids (default: the full catalog). */
  only?: string[];
  /** Output directory (default: <run-dir>/figures). */
  outDir?: string;
}

/** Render one figure; returns the written file paths. */
export function renderFigure(
  spec: FigureSpec,
  runDir: string,
  outDir: string,
): RenderResult {
  const model = composeFigure(spec, runDir);
  const ops = layout(model);
  mkdirSync(outDir, { recursive: true });
  const svgPath = join(outDir, `${spec.id}.svg`);
  const pngPath = join(outDir, `${spec.id}.png`);
  writeFileSync(svgPath, toSvg(ops, model.width, model.height), "utf-8");
  writeFileSync(pngPath, rasterize(ops, model.width, model.height));
  return { id: spec.id, svgPath, pngPath };
}

/** Render a run directory's figure set (all of it, or a named subset). */
export function renderRun(runDir: string, options: RenderOptions = {}): RenderResult[] {
  let specs: FigureSpec[];
  if (options.only && options.only.length > 0) {
    specs = options.only.map((id) => {
      const spec = findFigure(id);
      if (!spec) throw new UnknownFigureError(id, figureIds());
      return spec;
    });
  } else {
    specs = FIGURES;
  }
  const outDir = options.outDir ?? join(runDir, "figures");
  return specs.map((spec) => renderFigure(spec, runDir, outDir));
}
