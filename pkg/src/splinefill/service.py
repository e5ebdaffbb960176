"""HTTP layer over the inpainting engine for the browser UI.

Stateless multipart endpoints: POST /api/inpaint returns the restored PNG
with the engine time in X-Elapsed-Seconds, POST /api/metrics returns
PSNR/SSIM as JSON (+infinity serialized as the string "inf"), GET /health
is a liveness probe. With a static directory the built UI is served at /.
"""

from __future__ import annotations

import io
import math
import time
from typing import Optional

from fastapi import FastAPI, File, Form, UploadFile
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import __version__, imagecore, metrics
from .engine import InpaintConfig, inpaint
from .imagecore import DimensionMismatchError, UnsupportedImageError, luminance

DEFAULT_MAX_BYTES = 32 * 1024 * 1024


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def create_app(
    static_dir: Optional[str] = None, max_bytes: int = DEFAULT_MAX_BYTES
) -> FastAPI:
    app = FastAPI(title="splinefill", version=__version__)

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/inpaint")
    async def api_inpaint(
        image: UploadFile = File(...),
        mask: UploadFile = File(...),
        k_total: Optional[int] = Form(None),
        edge_threshold: Optional[float] = Form(None),
        max_passes: Optional[int] = Form(None),
    ):
        image_bytes = await image.read()
        mask_bytes = await mask.read()
        if len(image_bytes) > max_bytes or len(mask_bytes) > max_bytes:
            return JSONResponse(
                status_code=413, content={"error": "payload too large"}
            )
        try:
            grid = imagecore.load_image(io.BytesIO(image_bytes))
            scratch = imagecore.load_mask(io.BytesIO(mask_bytes))
            cfg = InpaintConfig(
                k_total=k_total if k_total is not None else 4,
                edge_threshold=edge_threshold if edge_threshold is not None else 0.15,
                max_passes=max_passes if max_passes is not None else 8,
            )
            imagecore.check_pairing(grid, scratch)
        except (UnsupportedImageError, DimensionMismatchError, ValueError) as exc:
            return _bad_request(str(exc))
        t0 = time.perf_counter()
        restored = inpaint(grid, scratch, cfg)
        elapsed = time.perf_counter() - t0
        buf = io.BytesIO()
        imagecore.save_image(restored, buf)
        return Response(
            content=buf.getvalue(),
            media_type="image/png",
            headers={"X-Elapsed-Seconds": f"{elapsed:.6f}"},
        )

    @app.post("/api/metrics")
    async def api_metrics(
        reference: UploadFile = File(...), test: UploadFile = File(...)
    ):
        ref_bytes = await reference.read()
        test_bytes = await test.read()
        if len(ref_bytes) > max_bytes or len(test_bytes) > max_bytes:
            return JSONResponse(
                status_code=413, content={"error": "payload too large"}
            )
        try:
            ref = imagecore.load_image(io.BytesIO(ref_bytes))
            tst = imagecore.load_image(io.BytesIO(test_bytes))
            if ref.channels != tst.channels:
                # mixed gray/RGB pairs are compared on luminance
                ref = luminance(ref)
                tst = luminance(tst)
            psnr_db = metrics.psnr(ref, tst)
            ssim_val = metrics.ssim(ref, tst)
        except (UnsupportedImageError, DimensionMismatchError, ValueError) as exc:
            return _bad_request(str(exc))
        return {
            "psnr_db": "inf" if math.isinf(psnr_db) else psnr_db,
            "ssim": ssim_val,
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
