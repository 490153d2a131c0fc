"""JSON records for frames, homomorphisms and reports."""
from __future__ import annotations

from typing import Any

from .errors import FrameError
from .frame import Frame, frame_from_pairs
from .maps import FrameHom

__all__ = ["frame_to_json", "frame_from_json", "hom_to_json", "hom_from_json"]


def frame_to_json(F: Frame) -> dict[str, Any]:
    """Covering pairs only; the reader applies the reflexive-transitive closure."""
    return {
        "n": F.n,
        "names": list(F.names),
        "leq": [[a, b] for a, b in F.order_pairs() if a != b],
    }


def frame_from_json(data: dict) -> Frame:
    try:
        n = int(data["n"])
        pairs = [tuple(int(x) for x in p) for p in data.get("leq", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise FrameError(f"malformed frame record: {exc}") from exc
    if any(len(p) != 2 for p in pairs):
        raise FrameError("each leq entry must be a pair [i, j]")
    return frame_from_pairs(n, pairs, data.get("names"))


def hom_to_json(h: FrameHom, source_id: str, target_id: str) -> dict[str, Any]:
    return {"source": source_id, "target": target_id, "values": list(h.values)}


def hom_from_json(data: dict, resolve) -> FrameHom:
    """``resolve`` maps a frame id (or inline frame record) to a Frame."""
    try:
        src, tgt, values = data["source"], data["target"], data["values"]
    except KeyError as exc:
        raise FrameError(f"malformed hom record: missing {exc}") from exc
    M = frame_from_json(src) if isinstance(src, dict) else resolve(src)
    L = frame_from_json(tgt) if isinstance(tgt, dict) else resolve(tgt)
    return FrameHom(M, L, [v if isinstance(v, int) else L.index(v) for v in values])
