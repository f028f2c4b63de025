import random

from app.core.config import settings
from app.core.errors import RankDeficientError
from app.modules.octonion.basis import BasisTag, imaginary_change_of_basis
from app.modules.scalars.linalg import apply
from app.modules.scalars.sampling import random_rows, random_vector, seeded
from app.modules.verification.schemas import VerificationReport
from app.modules.verification.serialize import make_check

from .audit import chart_identity_audit
from .exterior import Plane3, TriVector, is_decomposable, on_grassmann_cone, plucker, wedge3


def random_plane(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> Plane3:
    while True:
        try:
            return Plane3.of(random_rows(rng, 3, 7, height), basis)
        except RankDeficientError:
            continue


def random_trivector(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> TriVector:
    while True:
        w = TriVector(tuple(random_vector(rng, 35, height)), basis)
        if not w.is_zero():
            return w


def random_generic_trivector(rng: random.Random, basis: BasisTag = BasisTag.E, height: int = 3) -> TriVector:
    """Random trivector off the Grassmann cone."""
    while True:
        w = random_trivector(rng, basis, height)
        if not on_grassmann_cone(w):
            return w


class GrassmannService:
    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = chart_identity_audit()
        report.suite, report.seed, report.samples = "grassmann", seed, samples
        checks = report.checks

        rng = seeded(seed, "grassmann.minors")
        bad = sum(1 for _ in range(samples) if not on_grassmann_cone(plucker(random_plane(rng))))
        checks.append(
            make_check("grassmann.random_minor_relations", "Pluecker relations", bad == 0, expected=0, computed=bad)
        )

        rng = seeded(seed, "grassmann.oracles")
        count = settings.ORACLE_SAMPLES
        disagreements = {"decomposable": 0, "generic": 0}
        for _ in range(count):
            w = plucker(random_plane(rng))
            if not (on_grassmann_cone(w) and is_decomposable(w)[0]):
                disagreements["decomposable"] += 1
            w = random_generic_trivector(rng)
            if is_decomposable(w)[0]:
                disagreements["generic"] += 1
        checks.append(
            make_check(
                "grassmann.oracle_agreement",
                "kernel test against Pluecker relations",
                not any(disagreements.values()),
                expected={"decomposable": 0, "generic": 0},
                computed=disagreements,
                note=f"{count} decomposable and {count} non-decomposable trivectors",
            )
        )

        rng = seeded(seed, "grassmann.roundtrip")
        bad = 0
        for _ in range(samples):
            w = plucker(random_plane(rng)).scale(random_vector(rng, 1)[0] or 1)
            ok, plane = is_decomposable(w)
            if not ok or not plucker(plane).proportional_to(w):
                bad += 1
        checks.append(
            make_check("grassmann.plane_roundtrip", "plane recovered from its trivector", bad == 0, expected=0, computed=bad)
        )

        rng = seeded(seed, "grassmann.basis_change")
        change = imaginary_change_of_basis(BasisTag.E, BasisTag.TILDE)
        bad = 0
        for _ in range(samples):
            u, v, w = (random_vector(rng, 7) for _ in range(3))
            converted = wedge3(apply(change, u), apply(change, v), apply(change, w), BasisTag.TILDE)
            if wedge3(u, v, w, BasisTag.E).to(BasisTag.TILDE) != converted:
                bad += 1
        checks.append(
            make_check("grassmann.basis_change_commutes", "third exterior power of the basis change", bad == 0, expected=0, computed=bad)
        )
        return report
