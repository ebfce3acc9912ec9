/** Axis scales: data-to-pixel mapping plus tick placement.
 *
 * Tick positions are derived purely from the data domain, so identical
 * inputs always produce identical axes (and therefore identical images).
 */

export interface Tick {
  value: number;
  label: string;
}

export interface Scale {
  readonly kind: "linear" | "log";
  readonly min: number;
  readonly max: number;
  /** Map a data value into [0, 1] along the axis. */
  unit(value: number): number;
  ticks(): Tick[];
}

/** Shortest unambiguous label for a tick value. */
export function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e5 || abs < 1e-3) {
    const exp = Math.floor(Math.log10(abs));
    const mant = value / 10 ** exp;
    const m = Math.abs(mant - 1) < 1e-9 ? "" : `${trimFloat(mant)}x`;
    return `${m}1e${exp}`;
  }
  return trimFloat(value);
}

function trimFloat(value: number): string {
  const fixed = value.toPrecision(6);
  return String(Number(fixed));
}

class LinearScale implements Scale {
  readonly kind = "linear" as const;
  readonly min: number;
  readonly max: number;

  constructor(min: number, max: number) {
    if (!(Number.isFinite(min) && Number.isFinite(max)) || min >= max) {
      throw new RangeError(`bad linear domain [${min}, ${max}]`);
    }
    this.min = min;
    this.max = max;
  }

  unit(value: number): number {
    return (value - this.min) / (this.max - this.min);
  }

  ticks(): Tick[] {
    const step = niceStep(this.max - this.min, 6);
    const first = Math.ceil(this.min / step - 1e-9) * step;
    const out: Tick[] = [];
    for (let v = first; v <= this.max + 1e-9 * step; v += step) {
      const snapped = Math.abs(v) < step * 1e-9 ? 0 : v;
      out.push({ value: snapped, label: formatTick(roundStep(snapped, step)) });
    }
    return out;
  }
}

/** Largest of {1, 2, 5} x 10^k giving at most `target` intervals. */
function niceStep(span: number, target: number): number {
  const raw = span / target;
  const mag = 10 ** Math.floor(Math.log10(raw));
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw - 1e-12 * mag) return m * mag;
  }
  return 10 * mag;
}

function roundStep(value: number, step: number): number {
  const digits = Math.max(0, -Math.floor(Math.log10(step)) + 1);
  return Number(value.toFixed(Math.min(12, digits + 2)));
}

class LogScale implements Scale {
  readonly kind = "log" as const;
  readonly min: number;
  readonly max: number;

  constructor(min: number, max: number) {
    if (!(min > 0 && max > min && Number.isFinite(max))) {
      throw new RangeError(`bad log domain [${min}, ${max}]`);
    }
    this.min = min;
    this.max = max;
  }

  unit(value: number): number {
    return Math.log(value / this.min) / Math.log(this.max / this.min);
  }

  ticks(): Tick[] {
    const decades = Math.log10(this.max / this.min);
    // Sparse span: decade marks only.  Tight span: add 2 and 5 mantissas.
    const mantissas = decades > 1.5 ? [1] : [1, 2, 5];
    const out: Tick[] = [];
    const eLo = Math.floor(Math.log10(this.min));
    const eHi = Math.ceil(Math.log10(this.max));
    for (let e = eLo; e <= eHi; e += 1) {
      for (const m of mantissas) {
        const v = m * 10 ** e;
        if (v >= this.min * (1 - 1e-12) && v <= this.max * (1 + 1e-12)) {
          out.push({ value: v, label: formatTick(v) });
        }
      }
    }
    return out;
  }
}

export function linearScale(min: number, max: number): Scale {
  return new LinearScale(min, max);
}

export function logScale(min: number, max: number): Scale {
  return new LogScale(min, max);
}

/** Domain padded by 4% (linear) or one 25th of a decade (log). */
export function autoScale(values: number[], kind: "linear" | "log"): Scale {
  const finite = values.filter((v) => Number.isFinite(v));
  if (finite.length === 0) throw new RangeError("no finite values to scale");
  let lo = Math.min(...finite);
  let hi = Math.max(...finite);
  if (kind === "log") {
    if (lo <= 0) throw new RangeError("log scale requires positive values");
    const pad = 10 ** (Math.log10(hi / lo) / 25 || 0.04);
    return logScale(lo / pad, hi * pad);
  }
  if (lo > 0 && lo < 0.35 * hi) lo = 0; // anchor rate axes at zero
  const span = hi - lo || Math.abs(hi) || 1;
  const pad = 0.04 * span;
  return linearScale(lo === 0 ? 0 : lo - pad, hi + pad);
}
