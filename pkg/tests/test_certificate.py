import json

import pytest

from gf2split.certificate import CertificateError, SplitCertificate
from gf2split.field import make_field
from gf2split.matrix import random_matrix
from gf2split.splitter import SplitOptions, split_any, split_f2
from gf2split.verify import check_certificate


@pytest.mark.parametrize("mode,m", [("diag-split", 3), ("potent4-f2", 1), ("potent-subfield", 4)])
def test_json_round_trip(mode, m, rng):
    F = make_field(m)
    opts = SplitOptions(mode=mode, subfield_degree=2 if mode == "potent-subfield" else None)
    while True:
        A = random_matrix(5, F, rng)
        try:
            cert = split_any(A, opts)
            break
        except ValueError:  # derogatory or outside the subfield hypothesis
            continue
    again = SplitCertificate.from_json(cert.to_json())
    assert again.to_dict() == cert.to_dict()
    assert check_certificate(again.A, again).ok


def test_document_fields(rng):
    cert = split_f2(random_matrix(6, make_field(1), rng))
    doc = json.loads(cert.to_json())
    assert doc["schema"] == "cert-v1"
    assert doc["mode"] == "potent4-f2" and doc["potency_s"] == 4
    assert doc["N"].startswith("field gf(2^1)[modulus=0x2]\nn 6\n")
    assert all(set(b) >= {"rule", "a", "normalization", "layout"} for b in doc["blocks"])


def test_bad_documents():
    with pytest.raises(CertificateError, match="schema"):
        SplitCertificate.from_json('{"schema": "cert-v0"}')
    with pytest.raises(CertificateError, match="line 1"):
        SplitCertificate.from_json("{not json")
    with pytest.raises(CertificateError, match="malformed"):
        SplitCertificate.from_json('{"schema": "cert-v1", "mode": "diag-split"}')
