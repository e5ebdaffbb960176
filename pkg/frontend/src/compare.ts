/**
 * Pure compositing helpers for the before/after wipe view and the mask
 * overlay tint. All functions work on RGBA byte arrays so they can be unit
 * tested without a canvas.
 */

export const OVERLAY_COLOR: [number, number, number] = [255, 32, 32];
export const OVERLAY_ALPHA = 0.5;

export function clamp01(t: number): number {
  if (Number.isNaN(t)) return 0;
  return Math.min(1, Math.max(0, t));
}

/** Columns (from the left) that show the result; 0 = pure source, width = pure result. */
export function wipeSplitColumn(width: number, slider: number): number {
  return Math.round(clamp01(slider) * width);
}

/** Wipe compare: left part of the frame from `result`, the rest from `source`. */
export function applyWipe(
  source: Uint8ClampedArray,
  result: Uint8ClampedArray,
  width: number,
  height: number,
  slider: number,
): Uint8ClampedArray {
  if (source.length !== width * height * 4 || result.length !== source.length) {
    throw new Error("pixel buffers do not match the frame dimensions");
  }
  const split = wipeSplitColumn(width, slider);
  const out = source.slice();
  for (let y = 0; y < height; y++) {
    const rowStart = y * width * 4;
    out.set(result.subarray(rowStart, rowStart + split * 4), rowStart);
  }
  return out;
}

/** Tint masked pixels at 50% opacity; unmasked pixels pass through untouched. */
export function tintMasked(
  pixels: Uint8ClampedArray,
  maskBits: Uint8Array,
  width: number,
  height: number,
): Uint8ClampedArray {
  if (pixels.length !== width * height * 4 || maskBits.length !== width * height) {
    throw new Error("pixel buffers do not match the frame dimensions");
  }
  const out = pixels.slice();
  for (let i = 0; i < maskBits.length; i++) {
    if (maskBits[i] !== 1) continue;
    const p = i * 4;
    for (let ch = 0; ch < 3; ch++) {
      out[p + ch] = Math.round(
        (1 - OVERLAY_ALPHA) * pixels[p + ch] + OVERLAY_ALPHA * OVERLAY_COLOR[ch],
      );
    }
  }
  return out;
}
