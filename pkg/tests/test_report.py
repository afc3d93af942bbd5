import pytest

from apxmm.report import ApproxReport


def test_report_roundtrip():
    rep = ApproxReport(method="svd", order=1, k=7, norm_da=1.5, norm_db=0.25,
                       apriori_estimate=0.01, wall_time=0.5)
    d = rep.to_dict()
    assert d["method"] == "svd"
    assert d["k"] == 7
    assert d["posterior_estimate"] is None
    assert d["measured_error"] is None


def test_report_validation():
    with pytest.raises(ValueError):
        ApproxReport(method="cd", order=0, k=-1, norm_da=0.0, norm_db=0.0)
    with pytest.raises(ValueError):
        ApproxReport(method="cd", order=0, k=0, norm_da=-1.0, norm_db=0.0)
    with pytest.raises(ValueError):
        ApproxReport(method="cd", order=0, k=0, norm_da=0.0, norm_db=-0.5)
