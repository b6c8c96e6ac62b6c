"""Verified (graph, coloring) pairs and a content-addressed store for them.

A certificate is re-verified every time it is loaded.  Files that fail are
moved to ``quarantine/`` under the store root and never handed out.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import shutil
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .coloring import VERIFIER_VERSION, EdgeColoring, verify_interval
from .constructions import canonical_complete_coloring
from .graphs import COMPLETE, HYPERCUBE, Family, Graph, GraphError, complete_graph, family_graph, hypercube_graph
from .search import SearchBudget, Status, find_interval_coloring

log = logging.getLogger(__name__)

CERT_FORMAT = "ic-certificate/1"
STORE_ENV = "IC_CERT_STORE"
DEFAULT_STORE = "ic-certs"


class CertificateError(ValueError):
    pass


class InfeasibleTarget(CertificateError):
    pass


class BudgetExhausted(CertificateError):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


@dataclass
class Certificate:
    coloring: EdgeColoring
    provenance: dict
    created_at: str = field(default_factory=_now)
    verifier_version: str = VERIFIER_VERSION

    @property
    def graph(self) -> Graph:
        return self.coloring.graph

    @property
    def t(self) -> int:
        return self.coloring.t

    @property
    def key(self) -> str:
        """Content address: graph hash, t and colors (timestamps excluded)."""
        body = json.dumps([self.graph.content_hash, self.t, list(self.coloring.colors)],
                          separators=(",", ":"))
        return hashlib.sha256(body.encode()).hexdigest()

    def to_dict(self) -> dict:
        fam = self.graph.family
        return {
            "format": CERT_FORMAT,
            "graph": {"family": fam.kind, "param": fam.param,
                      "hash": self.graph.content_hash, "document": self.graph.to_dict()},
            "coloring": self.coloring.to_dict(),
            "t": self.t,
            "provenance": self.provenance,
            "created_at": self.created_at,
            "verifier_version": self.verifier_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        """Parse and re-verify; raises CertificateError on any defect."""
        if data.get("format") != CERT_FORMAT:
            raise CertificateError(f"not an {CERT_FORMAT} document")
        try:
            gdesc = data["graph"]
            fam = Family(gdesc["family"], gdesc["param"])
            if fam.kind in (COMPLETE, HYPERCUBE):
                g = family_graph(fam)
            else:
                g = Graph.from_dict(gdesc["document"])
            if g.content_hash != gdesc["hash"]:
                raise CertificateError("graph hash does not match the regenerated graph")
            coloring = EdgeColoring.from_dict(data["coloring"], g)
        except (KeyError, TypeError, ValueError, GraphError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from None
        if coloring.t != data.get("t"):
            raise CertificateError("t field disagrees with the coloring")
        verdict = verify_interval(g, coloring)
        if not verdict:
            raise CertificateError(f"re-verification failed: {verdict.message}")
        return cls(coloring, data.get("provenance", {"kind": "imported"}),
                   data.get("created_at", _now()), data.get("verifier_version", VERIFIER_VERSION))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def make_certificate(family: str, param: int, target_t: int,
                     budget: Optional[SearchBudget] = None) -> Certificate:
    """Search for an interval ``target_t``-coloring and seal it.

    ``complete`` with param p means K_{2p}; ``hypercube`` with param n means Q_n.
    """
    if family == COMPLETE:
        g = complete_graph(2 * param)
    elif family == HYPERCUBE:
        g = hypercube_graph(param)
    else:
        raise CertificateError(f"unsupported family {family!r}")
    if target_t < g.max_degree:
        raise CertificateError(f"target t={target_t} is below Delta={g.max_degree}")
    out = find_interval_coloring(g, target_t, budget)
    if out.status is Status.INFEASIBLE:
        raise InfeasibleTarget(f"{g.family.label()} has no interval {target_t}-coloring")
    if out.status is Status.UNKNOWN:
        raise BudgetExhausted(f"budget exhausted after {out.nodes} nodes")
    cert = Certificate(out.coloring, {"kind": "oracle", "stats": out.stats()})
    # seal only what survives a full round trip
    return Certificate.from_dict(json.loads(cert.to_json()))


class CertificateStore:
    def __init__(self, root=None):
        if root is None:
            root = os.environ.get(STORE_ENV, DEFAULT_STORE)
        self.root = Path(root)

    @property
    def quarantine_dir(self) -> Path:
        return self.root / "quarantine"

    def add(self, cert: Certificate) -> Path:
        """Write ``cert``; a certificate already present is left untouched."""
        verdict = verify_interval(cert.graph, cert.coloring)
        if not verdict:
            raise CertificateError(f"refusing to store an invalid coloring: {verdict.message}")
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.root / f"{cert.key}.json"
        if path.exists():
            return path
        tmp = path.with_suffix(".tmp")
        tmp.write_text(cert.to_json())
        os.replace(tmp, path)
        return path

    def _quarantine(self, path: Path, why: str) -> None:
        log.warning("quarantining %s: %s", path.name, why)
        self.quarantine_dir.mkdir(parents=True, exist_ok=True)
        shutil.move(str(path), str(self.quarantine_dir / path.name))

    def load_all(self) -> list[Certificate]:
        if not self.root.is_dir():
            return []
        certs = []
        for path in sorted(self.root.glob("*.json")):
            try:
                certs.append(Certificate.from_json(path.read_text()))
            except (CertificateError, ValueError) as exc:
                self._quarantine(path, str(exc))
        return certs

    def find(self, family: str, param: int) -> Optional[Certificate]:
        """Largest-t certificate for the graph with family tag (family, param)."""
        hits = [c for c in self.load_all()
                if c.graph.family.kind == family and c.graph.family.param == param]
        return max(hits, key=lambda c: (c.t, c.key), default=None)


def complete_base(p: int, store: Optional[CertificateStore] = None) -> Optional[EdgeColoring]:
    """Best known interval coloring of K_{2p} for the tower, or None.

    K_2 needs no certificate: its single edge colored 1 already has
    3p - 2 = 1 colors.
    """
    if p == 1:
        return canonical_complete_coloring(1)
    if store is None:
        return None
    cert = store.find(COMPLETE, 2 * p)
    return cert.coloring if cert else None

