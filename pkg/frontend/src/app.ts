/**
 * Page wiring for the restoration loop: load a photo, paint the scratch
 * mask, send it to the service, inspect with the wipe slider, optionally
 * promote the result to a new source and repeat.
 *
 * All image math lives in maskBuffer/compare/api; this file only binds
 * those pieces to the DOM.
 */

import { MaskBuffer, Point, StrokeMode } from "./maskBuffer.js";
import { applyWipe, tintMasked } from "./compare.js";
import { ApiError, requestInpaint } from "./api.js";

interface Elements {
  file: HTMLInputElement;
  view: HTMLCanvasElement;
  brush: HTMLInputElement;
  mode: HTMLSelectElement;
  undo: HTMLButtonElement;
  clear: HTMLButtonElement;
  exportMask: HTMLButtonElement;
  inpaint: HTMLButtonElement;
  promote: HTMLButtonElement;
  slider: HTMLInputElement;
  overlay: HTMLInputElement;
  elapsed: HTMLSpanElement;
  banner: HTMLDivElement;
  bannerClose: HTMLButtonElement;
}

function toImageData(pixels: Uint8ClampedArray, width: number, height: number): ImageData {
  // fresh ArrayBuffer-backed copy keeps the ImageData constructor happy
  const copy = new Uint8ClampedArray(new ArrayBuffer(pixels.length));
  copy.set(pixels);
  return new ImageData(copy, width, height);
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

class App {
  private readonly ui: Elements;
  private source: ImageData | null = null;
  private result: ImageData | null = null;
  private mask: MaskBuffer | null = null;
  private inFlight = false;
  private stroke: Point[] = [];
  private painting = false;

  constructor(ui: Elements) {
    this.ui = ui;
    ui.file.addEventListener("change", () => void this.loadFile());
    ui.undo.addEventListener("click", () => {
      if (this.mask?.undo()) this.render();
    });
    ui.clear.addEventListener("click", () => {
      this.mask?.clear();
      this.render();
    });
    ui.exportMask.addEventListener("click", () => void this.downloadMask());
    ui.inpaint.addEventListener("click", () => void this.runInpaint());
    ui.promote.addEventListener("click", () => this.promoteResult());
    ui.slider.addEventListener("input", () => this.render());
    ui.overlay.addEventListener("change", () => this.render());
    ui.bannerClose.addEventListener("click", () => this.hideBanner());

    ui.view.addEventListener("pointerdown", (e) => this.strokeStart(e));
    ui.view.addEventListener("pointermove", (e) => this.strokeMove(e));
    ui.view.addEventListener("pointerup", () => this.strokeEnd());
    ui.view.addEventListener("pointerleave", () => this.strokeEnd());
    this.syncControls();
  }

  private async loadFile(): Promise<void> {
    const file = this.ui.file.files?.[0];
    if (!file) return;
    const bitmap = await createImageBitmap(file);
    const canvas = this.ui.view;
    canvas.width = bitmap.width;
    canvas.height = bitmap.height;
    const ctx = canvas.getContext("2d")!;
    ctx.drawImage(bitmap, 0, 0);
    this.source = ctx.getImageData(0, 0, bitmap.width, bitmap.height);
    this.mask = new MaskBuffer(bitmap.width, bitmap.height);
    this.result = null;
    this.hideBanner();
    this.syncControls();
    this.render();
  }

  private canvasPoint(e: PointerEvent): Point {
    const rect = this.ui.view.getBoundingClientRect();
    return {
      x: ((e.clientX - rect.left) / rect.width) * this.ui.view.width,
      y: ((e.clientY - rect.top) / rect.height) * this.ui.view.height,
    };
  }

  private strokeStart(e: PointerEvent): void {
    if (!this.mask || this.inFlight) return;
    this.painting = true;
    this.stroke = [this.canvasPoint(e)];
  }

  private strokeMove(e: PointerEvent): void {
    if (!this.painting) return;
    this.stroke.push(this.canvasPoint(e));
  }

  private strokeEnd(): void {
    if (!this.painting || !this.mask) {
      this.painting = false;
      return;
    }
    this.painting = false;
    const brush = Number(this.ui.brush.value);
    const mode = this.ui.mode.value as StrokeMode;
    this.mask.paintStroke(this.stroke, brush, mode);
    this.stroke = [];
    this.syncControls();
    this.render();
  }

  /** Encode the current mask as a strictly binary gray PNG blob. */
  private async maskBlob(): Promise<Blob> {
    const mask = this.mask!;
    const bytes = mask.toBytes();
    const rgba = new Uint8ClampedArray(bytes.length * 4);
    for (let i = 0; i < bytes.length; i++) {
      rgba[i * 4] = bytes[i];
      rgba[i * 4 + 1] = bytes[i];
      rgba[i * 4 + 2] = bytes[i];
      rgba[i * 4 + 3] = 255;
    }
    const canvas = document.createElement("canvas");
    canvas.width = mask.width;
    canvas.height = mask.height;
    canvas.getContext("2d")!.putImageData(
      toImageData(rgba, mask.width, mask.height), 0, 0,
    );
    return new Promise((resolve, reject) =>
      canvas.toBlob(
        (b) => (b ? resolve(b) : reject(new Error("mask encoding failed"))),
        "image/png",
      ),
    );
  }

  private async sourceBlob(): Promise<Blob> {
    const src = this.source!;
    const canvas = document.createElement("canvas");
    canvas.width = src.width;
    canvas.height = src.height;
    canvas.getContext("2d")!.putImageData(src, 0, 0);
    return new Promise((resolve, reject) =>
      canvas.toBlob(
        (b) => (b ? resolve(b) : reject(new Error("image encoding failed"))),
        "image/png",
      ),
    );
  }

  private async downloadMask(): Promise<void> {
    if (!this.mask) return;
    const blob = await this.maskBlob();
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "mask.png";
    link.click();
    URL.revokeObjectURL(link.href);
  }

  private async runInpaint(): Promise<void> {
    if (!this.source || !this.mask || this.inFlight) return;
    if (this.mask.isEmpty()) {
      this.showBanner("Paint at least one scratch before inpainting.");
      return;
    }
    this.inFlight = true;
    this.syncControls();
    try {
      const { image, elapsedSeconds } = await requestInpaint(
        await this.sourceBlob(),
        await this.maskBlob(),
      );
      const bitmap = await createImageBitmap(image);
      const canvas = document.createElement("canvas");
      canvas.width = bitmap.width;
      canvas.height = bitmap.height;
      const ctx = canvas.getContext("2d")!;
      ctx.drawImage(bitmap, 0, 0);
      this.result = ctx.getImageData(0, 0, bitmap.width, bitmap.height);
      this.ui.elapsed.textContent =
        elapsedSeconds === null ? "" : `server time ${elapsedSeconds.toFixed(3)} s`;
      this.ui.slider.value = "1";
      this.hideBanner();
    } catch (err) {
      const message =
        err instanceof ApiError
          ? `Server rejected the request: ${err.message}`
          : "Could not reach the inpainting service.";
      this.showBanner(message);
    } finally {
      this.inFlight = false;
      this.syncControls();
      this.render();
    }
  }

  private promoteResult(): void {
    if (!this.result || !this.mask) return;
    this.source = this.result;
    this.result = null;
    this.mask = new MaskBuffer(this.source.width, this.source.height);
    this.ui.elapsed.textContent = "";
    this.syncControls();
    this.render();
  }

  private render(): void {
    if (!this.source || !this.mask) return;
    const { width, height } = this.source;
    let pixels: Uint8ClampedArray = this.source.data;
    if (this.result) {
      pixels = applyWipe(
        this.source.data,
        this.result.data,
        width,
        height,
        Number(this.ui.slider.value),
      );
    }
    if (this.ui.overlay.checked) {
      pixels = tintMasked(pixels, this.mask.bits(), width, height);
    }
    const ctx = this.ui.view.getContext("2d")!;
    ctx.putImageData(toImageData(pixels, width, height), 0, 0);
  }

  private syncControls(): void {
    const loaded = this.source !== null;
    this.ui.inpaint.disabled = !loaded || this.inFlight;
    this.ui.undo.disabled = !loaded || this.inFlight;
    this.ui.clear.disabled = !loaded || this.inFlight;
    this.ui.exportMask.disabled = !loaded;
    this.ui.promote.disabled = this.result === null || this.inFlight;
    this.ui.slider.disabled = this.result === null;
  }

  private showBanner(message: string): void {
    this.ui.banner.hidden = false;
    this.ui.banner.querySelector("span")!.textContent = message;
  }

  private hideBanner(): void {
    this.ui.banner.hidden = true;
  }
}

new App({
  file: el("file"),
  view: el("view"),
  brush: el("brush"),
  mode: el("mode"),
  undo: el("undo"),
  clear: el("clear"),
  exportMask: el("export-mask"),
  inpaint: el("inpaint"),
  promote: el("promote"),
  slider: el("slider"),
  overlay: el("overlay"),
  elapsed: el("elapsed"),
  banner: el("banner"),
  bannerClose: el("banner-close"),
});
