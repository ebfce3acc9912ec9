import { describe, expect, it } from "vitest";

import { autoScale, formatTick, linearScale, logScale } from "../src/scale.js";

describe("linear scale", () => {
  it("maps the domain onto [0, 1]", () => {
    const s = linearScale(10, 30);
    expect(s.unit(10)).toBe(0);
    expect(s.unit(30)).toBe(1);
    expect(s.unit(20)).toBeCloseTo(0.5, 12);
  });

  it("places ticks on a 1/2/5 step covering the domain", () => {
    const ticks = linearScale(0, 1).ticks();
    expect(ticks.map((t) => t.value)).toEqual([0, 0.2, 0.4, 0.6, 0.8, 1.0].map(
      (v) => expect.closeTo(v, 9) as unknown as number,
    ));
    const wide = linearScale(57.6, 122.4).ticks().map((t) => t.value);
    expect(wide).toEqual([60, 80, 100, 120]);
  });

  it("rejects degenerate domains", () => {
    expect(() => linearScale(1, 1)).toThrow(RangeError);
    expect(() => linearScale(2, 1)).toThrow(RangeError);
    expect(() => linearScale(NaN, 1)).toThrow(RangeError);
  });
});

describe("log scale", () => {
  it("maps decades evenly", () => {
    const s = logScale(1, 100);
    expect(s.unit(10)).toBeCloseTo(0.5, 12);
  });

  it("uses decade ticks over wide spans and mantissas over tight ones", () => {
    const wide = logScale(10, 1e6).ticks().map((t) => t.value);
    expect(wide).toEqual([10, 100, 1000, 10000, 100000, 1000000]);
    const tight = logScale(5, 100).ticks().map((t) => t.value);
    expect(tight).toEqual([5, 10, 20, 50, 100]);
  });

  it("rejects non-positive domains", () => {
    expect(() => logScale(0, 10)).toThrow(RangeError);
    expect(() => logScale(-1, 10)).toThrow(RangeError);
  });
});

describe("autoScale", () => {
  it("anchors rate-like axes at zero", () => {
    const s = autoScale([2, 5, 8], "linear");
    expect(s.min).toBe(0);
    expect(s.max).toBeGreaterThan(8);
  });

  it("keeps a far-from-zero domain tight", () => {
    const s = autoScale([60, 120], "linear");
    expect(s.min).toBeGreaterThan(50);
  });

  it("pads log domains multiplicatively", () => {
    const s = autoScale([10, 1000], "log");
    expect(s.min).toBeLessThan(10);
    expect(s.min).toBeGreaterThan(5);
    expect(s.max).toBeGreaterThan(1000);
  });

  it("rejects log scaling of non-positive data", () => {
    expect(() => autoScale([0, 5], "log")).toThrow(RangeError);
  });

  it("rejects empty input", () => {
    expect(() => autoScale([], "linear")).toThrow(RangeError);
  });
});

describe("formatTick", () => {
  it("prints plain numbers in the mid range", () => {
    expect(formatTick(0)).toBe("0");
    expect(formatTick(0.2)).toBe("0.2");
    expect(formatTick(-15)).toBe("-15");
    expect(formatTick(99999)).toBe("99999");
  });

  it("switches to exponent form for extremes", () => {
    expect(formatTick(1e5)).toBe("1e5");
    expect(formatTick(2e5)).toBe("2x1e5");
    expect(formatTick(1e-4)).toBe("1e-4");
  });
});
