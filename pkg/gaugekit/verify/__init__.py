from gaugekit.verify.checks import REGISTRY, VerifyContext, register, run_verify
from gaugekit.verify.instances import instance_id, random_gauge, random_pair, random_polytope
from gaugekit.verify.oracles import bisect_gamma, dense_ratio_scan, oracle_circumradius
from gaugekit.verify.report import ManifestEntry, VerifyReport, load_manifest

__all__ = [
    "REGISTRY",
    "ManifestEntry",
    "VerifyContext",
    "VerifyReport",
    "bisect_gamma",
    "dense_ratio_scan",
    "instance_id",
    "load_manifest",
    "oracle_circumradius",
    "random_gauge",
    "random_pair",
    "random_polytope",
    "register",
    "run_verify",
]
