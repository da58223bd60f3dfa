"""Minimal HTTP facade driving segment_at from cursor positions.

Two endpoints, JSON in/out for the segment call, CORS open for the local
viewer. The loaded image is immutable shared state; each request owns its
pipeline, so the threading server can handle cursor moves concurrently.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import ConfigError, DomainError, UscutError
from .image import GrayImage, pgm_bytes
from .session import segment_at
from .template import DEFAULT_CONFIG, TemplateConfig


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 0
    host: str = "127.0.0.1"
    cfg: TemplateConfig = field(default_factory=TemplateConfig)


def _segment_payload(img: GrayImage, base: TemplateConfig, body: bytes) -> tuple[int, dict]:
    try:
        request = json.loads(body)
    except json.JSONDecodeError:
        return 400, {"error": "request body is not valid JSON"}
    if not isinstance(request, dict):
        return 400, {"error": "request body must be a JSON object"}
    try:
        seed = (float(request["seed_x"]), float(request["seed_y"]))
    except KeyError as exc:
        return 400, {"error": f"missing field {exc.args[0]!r}"}
    except (TypeError, ValueError):
        return 400, {"error": "seed_x and seed_y must be numbers"}
    try:
        cfg = TemplateConfig(
            num_rays=int(request.get("rays", base.num_rays)),
            nodes_per_ray=int(request.get("nodes", base.nodes_per_ray)),
            radius_px=float(request.get("radius_px", base.radius_px)),
            delta=int(request.get("delta", base.delta)),
        )
    except ConfigError as exc:
        return 422, {"error": str(exc)}
    except (TypeError, ValueError):
        return 400, {"error": "config fields must be numbers"}
    try:
        result = segment_at(img, seed, cfg)
    except DomainError as exc:
        return 400, {"error": str(exc)}
    except UscutError as exc:
        return 400, {"error": str(exc)}
    return 200, {
        "seed": [result.seed[0], result.seed[1]],
        "points": [[float(x), float(y)] for x, y in result.contour.points],
        "diameter_mm": result.diameter_mm,
        "area_mm2": result.area_mm2,
        "elapsed_ms": result.elapsed_ms,
        "cut_indices": [int(k) for k in result.cut.cut_indices],
    }


class SegmentationHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    # bound by make_server
    image: GrayImage = None  # type: ignore[assignment]
    default_cfg: TemplateConfig = DEFAULT_CONFIG

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _cors(self):
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _send_json(self, status: int, payload: dict):
        body = json.dumps(payload).encode("ascii")
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _image_headers(self) -> bytes:
        img = self.image
        body = pgm_bytes(img)
        self.send_response(200)
        self._cors()
        self.send_header("Content-Type", "application/octet-stream")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("X-Width", str(img.width))
        self.send_header("X-Height", str(img.height))
        self.send_header("X-Spacing", repr(img.spacing))
        self.end_headers()
        return body

    def do_GET(self):
        if self.path == "/api/image":
            if self.image is None:
                self._send_json(500, {"error": "no image loaded"})
                return
            body = self._image_headers()
            self.wfile.write(body)
        else:
            self._send_json(404, {"error": f"no such endpoint: {self.path}"})

    def do_HEAD(self):
        if self.path == "/api/image" and self.image is not None:
            self._image_headers()
        else:
            self.send_response(404)
            self._cors()
            self.send_header("Content-Length", "0")
            self.end_headers()

    def do_POST(self):
        if self.path != "/api/segment":
            self._send_json(404, {"error": f"no such endpoint: {self.path}"})
            return
        length = int(self.headers.get("Content-Length", 0))
        body = self.rfile.read(length) if length else b""
        status, payload = _segment_payload(self.image, self.default_cfg, body)
        self._send_json(status, payload)

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()


def make_server(img: GrayImage, service: ServiceConfig = ServiceConfig()) -> ThreadingHTTPServer:
    """Build (but do not start) the API server; port 0 picks a free port."""
    handler = type(
        "BoundHandler",
        (SegmentationHandler,),
        {"image": img, "default_cfg": service.cfg},
    )
    return ThreadingHTTPServer((service.host, service.port), handler)


def run_server(img: GrayImage, port: int, cfg: TemplateConfig = DEFAULT_CONFIG) -> None:
    """Serve until interrupted (CLI entry)."""
    server = make_server(img, ServiceConfig(port=port, cfg=cfg))
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port} (image {img.width}x{img.height})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def start_background(
    img: GrayImage, service: ServiceConfig = ServiceConfig()
) -> tuple[ThreadingHTTPServer, threading.Thread]:
    """Start the server on a daemon thread; used by tests."""
    server = make_server(img, service)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
