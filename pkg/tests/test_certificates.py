import json

import pytest

from intcol import complete_graph
from intcol.certificates import (
    Certificate,
    CertificateError,
    CertificateStore,
    InfeasibleTarget,
    complete_base,
    make_certificate,
)
from intcol.coloring import EdgeColoring
from intcol.constructions import build_complete_tower, double_complete, canonical_complete_coloring
from intcol.graphs import COMPLETE
from intcol.search import SearchBudget
from conftest import assert_interval


@pytest.fixture(scope="module")
def k6_cert():
    return make_certificate(COMPLETE, 3, 7, SearchBudget(120))


def test_make_k6_certificate(k6_cert):
    assert k6_cert.t == 7 == 3 * 3 - 2
    assert k6_cert.graph == complete_graph(6)
    assert k6_cert.provenance["kind"] == "oracle"
    assert set(k6_cert.provenance["stats"]) == {"nodes", "elapsed_ms", "status"}
    assert_interval(k6_cert.graph, k6_cert.coloring)


def test_make_trivial_and_hypercube_certificates():
    c = make_certificate(COMPLETE, 1, 1)
    assert c.t == 1 and c.coloring.colors == (1,)
    q = make_certificate("hypercube", 3, 6, SearchBudget(60))
    assert q.t == 6
    assert_interval(q.graph, q.coloring)


def test_make_certificate_infeasible():
    with pytest.raises(InfeasibleTarget):
        make_certificate(COMPLETE, 2, 5, SearchBudget(60))
    with pytest.raises(CertificateError):
        make_certificate(COMPLETE, 2, 2)


def test_round_trip(k6_cert):
    back = Certificate.from_json(k6_cert.to_json())
    assert back.coloring == k6_cert.coloring
    assert back.key == k6_cert.key
    assert back.created_at == k6_cert.created_at


def test_tampered_certificate_rejected(k6_cert):
    doc = json.loads(k6_cert.to_json())
    doc["coloring"]["colors"][0] = 1 if doc["coloring"]["colors"][0] != 1 else 2
    with pytest.raises(CertificateError):
        Certificate.from_dict(doc)
    doc = json.loads(k6_cert.to_json())
    doc["graph"]["hash"] = "sha256:" + "0" * 64
    with pytest.raises(CertificateError):
        Certificate.from_dict(doc)


def test_store_is_idempotent_and_content_addressed(tmp_path, k6_cert):
    store = CertificateStore(tmp_path)
    p1 = store.add(k6_cert)
    again = Certificate(k6_cert.coloring, {"kind": "imported"}, created_at="2000-01-01T00:00:00+00:00")
    p2 = store.add(again)
    assert p1 == p2
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert store.find(COMPLETE, 6).coloring == k6_cert.coloring


def test_store_quarantines_bad_files(tmp_path, k6_cert):
    store = CertificateStore(tmp_path)
    path = store.add(k6_cert)
    doc = json.loads(path.read_text())
    doc["coloring"]["colors"][3] = doc["coloring"]["colors"][4]
    bad = tmp_path / ("f" * 64 + ".json")
    bad.write_text(json.dumps(doc))
    certs = store.load_all()
    assert len(certs) == 1
    assert (tmp_path / "quarantine" / bad.name).exists()
    assert not bad.exists()


def test_store_refuses_invalid_coloring(tmp_path):
    g = complete_graph(4)
    bad = EdgeColoring.build(g, 4, [1, 2, 3, 3, 2, 1])
    with pytest.raises(CertificateError):
        CertificateStore(tmp_path).add(Certificate(bad, {"kind": "imported"}))


def test_complete_base_lookup(tmp_path, k6_cert):
    assert complete_base(1).colors == (1,)
    store = CertificateStore(tmp_path)
    assert complete_base(3, store) is None
    store.add(k6_cert)
    base = complete_base(3, store)
    top, _ = build_complete_tower(6, base)
    assert top.t == 18


def test_tower_provenance_envelope(tmp_path):
    top = double_complete(canonical_complete_coloring(1))
    cert = Certificate(top, {"kind": "construction", "trace": [{"step": 1, "result_t": 4}]})
    back = Certificate.from_json(cert.to_json())
    assert back.provenance["trace"][0]["result_t"] == 4
