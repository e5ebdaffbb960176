/**
 * Thin client for the inpainting service. The fetch implementation is
 * injectable so request construction and response handling are unit
 * testable without a server.
 */

export interface InpaintOptions {
  kTotal?: number;
  edgeThreshold?: number;
  maxPasses?: number;
}

export interface InpaintResult {
  image: Blob;
  elapsedSeconds: number | null;
}

export interface MetricsResult {
  psnrDb: number | "inf";
  ssim: number;
}

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export function buildInpaintForm(
  image: Blob,
  mask: Blob,
  options: InpaintOptions = {},
): FormData {
  const form = new FormData();
  form.append("image", image, "image.png");
  form.append("mask", mask, "mask.png");
  if (options.kTotal !== undefined) form.append("k_total", String(options.kTotal));
  if (options.edgeThreshold !== undefined) {
    form.append("edge_threshold", String(options.edgeThreshold));
  }
  if (options.maxPasses !== undefined) {
    form.append("max_passes", String(options.maxPasses));
  }
  return form;
}

export function parseElapsedSeconds(header: string | null): number | null {
  if (header === null) return null;
  const value = Number(header);
  return Number.isFinite(value) && value >= 0 ? value : null;
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.error === "string") return body.error;
  } catch {
    /* non-JSON error body */
  }
  return `request failed with status ${response.status}`;
}

export async function requestInpaint(
  image: Blob,
  mask: Blob,
  options: InpaintOptions = {},
  fetchImpl: FetchLike = fetch,
  baseUrl = "",
): Promise<InpaintResult> {
  const response = await fetchImpl(`${baseUrl}/api/inpaint`, {
    method: "POST",
    body: buildInpaintForm(image, mask, options),
  });
  if (!response.ok) {
    throw new ApiError(response.status, await errorMessage(response));
  }
  return {
    image: await response.blob(),
    elapsedSeconds: parseElapsedSeconds(response.headers.get("X-Elapsed-Seconds")),
  };
}

export async function requestMetrics(
  reference: Blob,
  test: Blob,
  fetchImpl: FetchLike = fetch,
  baseUrl = "",
): Promise<MetricsResult> {
  const form = new FormData();
  form.append("reference", reference, "reference.png");
  form.append("test", test, "test.png");
  const response = await fetchImpl(`${baseUrl}/api/metrics`, {
    method: "POST",
    body: form,
  });
  if (!response.ok) {
    throw new ApiError(response.status, await errorMessage(response));
  }
  const body = await response.json();
  return { psnrDb: body.psnr_db, ssim: body.ssim };
}
