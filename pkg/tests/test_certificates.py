import copy

import pytest

from biramsey.analysis import find_p4, largest_component, max_connected_matching
from biramsey.balanced import find_balanced_component
from biramsey.certificates import (
    CertificateError,
    balanced_to_dict,
    component_to_dict,
    dumps,
    loads,
    matching_to_dict,
    p4_to_dict,
    verify,
)
from biramsey.coloring import new_coloring, parse

from conftest import random_coloring

MIXED = new_coloring(3, 4, 3, [[0, 0, 1, 2], [0, 1, 1, 2], [2, 2, 0, 0]])


def all_certs(c):
    certs = [component_to_dict(largest_component(c)), matching_to_dict(max_connected_matching(c))]
    w = find_p4(c)
    if w is not None:
        certs.append(p4_to_dict(w))
    if c.r <= 3:
        certs.append(balanced_to_dict(find_balanced_component(c)))
    return certs


def test_generated_certificates_verify(rng):
    for _ in range(200):
        c = random_coloring(rng, rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 3))
        for cert in all_certs(c):
            verify(c, loads(dumps(cert)))


def test_p4_rejections():
    cert = p4_to_dict(find_p4(MIXED))
    bad_color = dict(cert, color=(cert["color"] + 1) % 3)
    short = dict(cert, path=cert["path"][:3])
    repeat = dict(cert, path=[cert["path"][0], cert["path"][1], cert["path"][0], cert["path"][3]])
    out_of_range = dict(cert, path=[["X", 9]] + cert["path"][1:])
    for bad in (bad_color, short, repeat, out_of_range):
        with pytest.raises(CertificateError):
            verify(MIXED, bad)


def test_component_rejections():
    cert = component_to_dict(largest_component(MIXED))
    with pytest.raises(CertificateError, match="edge_count"):
        verify(MIXED, dict(cert, edge_count=cert["edge_count"] + 1))
    with pytest.raises(CertificateError, match="exactly one"):
        verify(MIXED, dict(cert, y=cert["y"][:-1]))
    with pytest.raises(CertificateError, match="duplicates"):
        verify(MIXED, dict(cert, x=cert["x"] + cert["x"][:1]))


def test_matching_rejections():
    cert = matching_to_dict(max_connected_matching(MIXED))
    assert len(cert["edges"]) == 2
    clash = copy.deepcopy(cert)
    clash["edges"][1][0] = clash["edges"][0][0]
    with pytest.raises(CertificateError):
        verify(MIXED, clash)
    with pytest.raises(CertificateError):
        verify(MIXED, dict(cert, edges=[]))
    with pytest.raises(CertificateError):
        verify(MIXED, dict(cert, component="nope"))


def test_balanced_rejections():
    c = parse("2 5 3\n1 1 0 2 2\n2 2 0 1 1\n")
    cert = balanced_to_dict(find_balanced_component(c))
    verify(c, cert)
    # another genuine component that misses the bar on Y
    small = {"type": "balanced", "color": 0, "x": [0, 1], "y": [2]}
    with pytest.raises(CertificateError, match=r"r\*\|y\|"):
        verify(c, small)
    tampered = copy.deepcopy(cert)
    tampered["trace"][0]["x"] = tampered["trace"][0]["x"][:-1] + [1 - tampered["trace"][0]["x"][-1]]
    with pytest.raises(CertificateError, match="trace"):
        verify(c, tampered)
    verify(c, dict(cert, trace=[]))


def test_unknown_type_and_bad_json():
    with pytest.raises(CertificateError, match="unknown"):
        verify(MIXED, {"type": "triangle"})
    with pytest.raises(CertificateError):
        loads("[1, 2]")
    with pytest.raises(CertificateError):
        loads("{not json")
    with pytest.raises(CertificateError, match="color"):
        verify(MIXED, {"type": "component", "color": 7, "x": [0], "y": [0], "edge_count": 1})
