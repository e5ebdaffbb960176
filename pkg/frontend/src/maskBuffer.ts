/**
 * Binary scratch-mask buffer with stroke-level undo.
 *
 * The mask mirrors the loaded photo pixel for pixel: 1 marks a lost pixel
 * the server should reconstruct, 0 a kept one. Strokes stamp a disc of the
 * brush diameter along the pointer trace; every stroke pushes one undo
 * snapshot. Export is strictly binary (0 or 255 per pixel).
 */

export type StrokeMode = "add" | "erase";

export interface Point {
  x: number;
  y: number;
}

const HISTORY_LIMIT = 64;

export class MaskBuffer {
  readonly width: number;
  readonly height: number;
  private data: Uint8Array;
  private history: Uint8Array[] = [];

  constructor(width: number, height: number) {
    if (width < 1 || height < 1 || !Number.isInteger(width) || !Number.isInteger(height)) {
      throw new Error(`invalid mask dimensions ${width}x${height}`);
    }
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height);
  }

  get(x: number, y: number): boolean {
    return this.inBounds(x, y) && this.data[y * this.width + x] === 1;
  }

  maskedCount(): number {
    let n = 0;
    for (const v of this.data) n += v;
    return n;
  }

  isEmpty(): boolean {
    return this.maskedCount() === 0;
  }

  /** Stamp a disc of the given diameter along the pointer trace. */
  paintStroke(path: Point[], brush: number, mode: StrokeMode): void {
    if (path.length === 0) return;
    this.pushHistory();
    let prev = path[0];
    this.stampDisc(prev.x, prev.y, brush, mode);
    for (let i = 1; i < path.length; i++) {
      const next = path[i];
      const steps = Math.max(
        Math.abs(Math.round(next.x) - Math.round(prev.x)),
        Math.abs(Math.round(next.y) - Math.round(prev.y)),
        1,
      );
      for (let s = 1; s <= steps; s++) {
        const t = s / steps;
        this.stampDisc(
          prev.x + (next.x - prev.x) * t,
          prev.y + (next.y - prev.y) * t,
          brush,
          mode,
        );
      }
      prev = next;
    }
  }

  /** Revert the latest stroke; false when there is nothing to undo. */
  undo(): boolean {
    const prior = this.history.pop();
    if (!prior) return false;
    this.data = prior;
    return true;
  }

  clear(): void {
    this.pushHistory();
    this.data = new Uint8Array(this.width * this.height);
  }

  /** One byte per pixel, strictly 0 or 255 (white = missing). */
  toBytes(): Uint8Array {
    const out = new Uint8Array(this.data.length);
    for (let i = 0; i < this.data.length; i++) {
      out[i] = this.data[i] === 1 ? 255 : 0;
    }
    return out;
  }

  /** Raw 0/1 view for compositing; callers must not mutate it. */
  bits(): Uint8Array {
    return this.data;
  }

  static fromBytes(width: number, height: number, bytes: Uint8Array): MaskBuffer {
    if (bytes.length !== width * height) {
      throw new Error(
        `byte count ${bytes.length} does not match ${width}x${height}`,
      );
    }
    const mask = new MaskBuffer(width, height);
    for (let i = 0; i < bytes.length; i++) {
      mask.data[i] = bytes[i] > 127 ? 1 : 0;
    }
    return mask;
  }

  private inBounds(x: number, y: number): boolean {
    return x >= 0 && x < this.width && y >= 0 && y < this.height;
  }

  private pushHistory(): void {
    this.history.push(this.data.slice());
    if (this.history.length > HISTORY_LIMIT) this.history.shift();
  }

  private stampDisc(cx: number, cy: number, brush: number, mode: StrokeMode): void {
    const value = mode === "add" ? 1 : 0;
    const x0 = Math.round(cx);
    const y0 = Math.round(cy);
    if (brush <= 1) {
      if (this.inBounds(x0, y0)) this.data[y0 * this.width + x0] = value;
      return;
    }
    const radius = brush / 2;
    const reach = Math.floor(radius);
    const r2 = radius * radius;
    for (let dy = -reach; dy <= reach; dy++) {
      for (let dx = -reach; dx <= reach; dx++) {
        if (dx * dx + dy * dy <= r2 && this.inBounds(x0 + dx, y0 + dy)) {
          this.data[(y0 + dy) * this.width + (x0 + dx)] = value;
        }
      }
    }
  }
}
