import { describe, expect, it } from "vitest";

import {
  OVERLAY_ALPHA,
  OVERLAY_COLOR,
  applyWipe,
  clamp01,
  tintMasked,
  wipeSplitColumn,
} from "../src/compare.js";

function solidFrame(width: number, height: number, value: number): Uint8ClampedArray {
  const out = new Uint8ClampedArray(width * height * 4);
  for (let i = 0; i < out.length; i += 4) {
    out[i] = value;
    out[i + 1] = value;
    out[i + 2] = value;
    out[i + 3] = 255;
  }
  return out;
}

describe("clamp01", () => {
  it("clamps and survives NaN", () => {
    expect(clamp01(-2)).toBe(0);
    expect(clamp01(0.5)).toBe(0.5);
    expect(clamp01(7)).toBe(1);
    expect(clamp01(NaN)).toBe(0);
  });
});

describe("wipeSplitColumn", () => {
  it("maps the slider ends to pure source / pure result", () => {
    expect(wipeSplitColumn(10, 0)).toBe(0);
    expect(wipeSplitColumn(10, 1)).toBe(10);
    expect(wipeSplitColumn(10, 0.5)).toBe(5);
  });
});

describe("applyWipe", () => {
  const w = 4;
  const h = 3;
  const source = solidFrame(w, h, 10);
  const result = solidFrame(w, h, 200);

  it("slider 0 shows the untouched source", () => {
    expect(Array.from(applyWipe(source, result, w, h, 0)))
      .toEqual(Array.from(source));
  });

  it("slider 1 shows the full result", () => {
    expect(Array.from(applyWipe(source, result, w, h, 1)))
      .toEqual(Array.from(result));
  });

  it("intermediate positions split every row at the same column", () => {
    const mixed = applyWipe(source, result, w, h, 0.5);
    for (let y = 0; y < h; y++) {
      for (let x = 0; x < w; x++) {
        const expected = x < 2 ? 200 : 10;
        expect(mixed[(y * w + x) * 4]).toBe(expected);
      }
    }
  });

  it("never mutates its inputs", () => {
    const before = Array.from(source);
    applyWipe(source, result, w, h, 0.7);
    expect(Array.from(source)).toEqual(before);
  });

  it("rejects mismatched buffers", () => {
    expect(() => applyWipe(source, result.slice(4), w, h, 0.5)).toThrow();
  });
});

describe("tintMasked", () => {
  it("tints only masked pixels at 50% opacity", () => {
    const w = 2;
    const h = 1;
    const pixels = solidFrame(w, h, 100);
    const mask = new Uint8Array([1, 0]);
    const out = tintMasked(pixels, mask, w, h);
    for (let ch = 0; ch < 3; ch++) {
      const expected = Math.round(
        (1 - OVERLAY_ALPHA) * 100 + OVERLAY_ALPHA * OVERLAY_COLOR[ch],
      );
      expect(out[ch]).toBe(expected);
    }
    expect([out[4], out[5], out[6]]).toEqual([100, 100, 100]);
    expect(out[3]).toBe(255); // alpha untouched
  });

  it("rejects mask of the wrong size", () => {
    expect(() =>
      tintMasked(solidFrame(2, 2, 0), new Uint8Array(3), 2, 2),
    ).toThrow();
  });
});
