export { readTable, Table } from "./csv.js";
export {
  BadNumberError,
  EmptyCsvError,
  MissingColumnError,
  MissingFileError,
  RenderError,
  UnknownFigureError,
  UsageError,
} from "./errors.js";
export {
  composeFigure,
  figureIds,
  figureInputs,
  FIGURES,
  findFigure,
  type FigureSpec,
  type LineFigureSpec,
  type RegionFigureSpec,
} from "./figures.js";
export { layout, type DrawOp, type PlotModel } from "./draw.js";
export { autoScale, formatTick, linearScale, logScale, type Scale } from "./scale.js";
export { toSvg } from "./svg.js";
export { Canvas, rasterize } from "./raster.js";
export { renderFigure, renderRun, type RenderOptions, type RenderResult } from "./render.js";
export { main, parseArgs } from "./cli.js";
