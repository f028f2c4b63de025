from itertools import combinations, product

from app.core.config import settings
from app.fixtures.loader import load_forms, load_named_forms
from app.modules.grassmann.exterior import Plane3
from app.modules.scalars.gauss import format_gauss, gq
from app.modules.scalars.sampling import seeded
from app.modules.verification.schemas import VerificationReport
from app.modules.verification.serialize import make_check

from .algebra import (
    Octonion,
    associator,
    cross,
    dot,
    e,
    oct_conj,
    oct_inner,
    oct_mul,
    oct_norm,
    random_imaginary,
    random_octonion,
    triple_cross,
)
from .forms import (
    associative_triple_norm,
    calibration_constant,
    chi3,
    chi_coefficient_tables,
    chi_component_tables,
    gram_determinant,
    is_associative_plane,
    orthogonal_triple,
    phi3,
    phi_table,
    plane_octonions,
    star_phi_table,
)

W0 = (1, 2, 3)
U0 = (1, 6, 7)
NON_ASSOCIATIVE = (1, 4, 6)


class AlgebraService:
    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = VerificationReport(suite="algebra", seed=seed, samples=samples)
        unit = Octonion.unit()
        checks = report.checks

        products = {
            "e.e5": (oct_mul(unit, e(5)), e(5)),
            "e1.e1": (oct_mul(e(1), e(1)), -unit),
            "e4.e4": (oct_mul(e(4), e(4)), unit),
            "e1.e2": (oct_mul(e(1), e(2)), e(3)),
        }
        checks.append(
            make_check(
                "algebra.multiplication_examples",
                "Cayley-Dickson product",
                all(lhs == rhs for lhs, rhs in products.values()),
                expected={name: list(rhs.coords) for name, (_, rhs) in products.items()},
                computed={name: list(lhs.coords) for name, (lhs, _) in products.items()},
            )
        )

        norms = {"N(e)": oct_norm(unit), "N(e4)": oct_norm(e(4)), "N(e1)": oct_norm(e(1)), "<e5,e6>": oct_inner(e(5), e(6))}
        expected_norms = {"N(e)": gq(1), "N(e4)": gq(-1), "N(e1)": gq(1), "<e5,e6>": gq(0)}
        checks.append(
            make_check("algebra.norm_examples", "norm N(a, b) = det a - det b", norms == expected_norms, expected_norms, norms)
        )

        basis = [Octonion.basis_vector(i) for i in range(8)]
        failures = [
            (i, j) for (i, x), (j, y) in product(enumerate(basis), repeat=2) if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y)
        ]
        checks.append(
            make_check("algebra.composition_basis", "composition law", not failures, expected=[], computed=failures, note="64 ordered basis pairs")
        )

        rng = seeded(seed, "algebra.composition")
        count = settings.COMPOSITION_SAMPLES
        bad = 0
        for _ in range(count):
            x, y = random_octonion(rng), random_octonion(rng)
            if oct_norm(oct_mul(x, y)) != oct_norm(x) * oct_norm(y):
                bad += 1
        checks.append(
            make_check("algebra.composition_random", "composition law", bad == 0, expected=0, computed=bad, note=f"{count} random pairs")
        )

        rng = seeded(seed, "algebra.conjugation")
        bad = 0
        for _ in range(samples):
            x, y = random_octonion(rng), random_octonion(rng)
            if oct_conj(oct_mul(x, y)) != oct_mul(oct_conj(y), oct_conj(x)):
                bad += 1
        checks.append(
            make_check("algebra.conjugation_antihomomorphism", "conjugation reverses products", bad == 0, expected=0, computed=bad)
        )

        rng = seeded(seed, "algebra.zorn")
        pairs = [(e(i), e(j)) for i in range(1, 8) for j in range(1, 8)]
        pairs += [(random_imaginary(rng), random_imaginary(rng)) for _ in range(samples)]
        bad_product = bad_norm = bad_dot = 0
        for a, b in pairs:
            ab = oct_mul(a, b)
            d = dot(a, b)
            if ab != unit.scale(-d) + cross(a, b):
                bad_product += 1
            if oct_norm(ab) != d * d + oct_norm(cross(a, b)):
                bad_norm += 1
            if d != oct_inner(a, b):
                bad_dot += 1
        checks.append(
            make_check("algebra.product_decomposition", "ab = (-a.b)e + a x b", bad_product == 0, expected=0, computed=bad_product)
        )
        checks.append(
            make_check("algebra.cross_norm", "N(ab) = (a.b)^2 + N(a x b)", bad_norm == 0, expected=0, computed=bad_norm)
        )
        checks.append(make_check("algebra.dot_is_inner", "dot product", bad_dot == 0, expected=0, computed=bad_dot))

        examples = {
            "[e1,e2,e3]": (associator(e(1), e(2), e(3)), Octonion.zero()),
            "[e1,e4,e6]": (associator(e(1), e(4), e(6)), e(3).scale(2)),
            "e1 x e2 x e3": (triple_cross(e(1), e(2), e(3)), unit),
            "e1 x e4 x e6": (triple_cross(e(1), e(4), e(6)), e(3)),
        }
        checks.append(
            make_check(
                "algebra.associator_examples",
                "associator and triple cross product",
                all(lhs == rhs for lhs, rhs in examples.values()),
                expected={name: list(rhs.coords) for name, (_, rhs) in examples.items()},
                computed={name: list(lhs.coords) for name, (lhs, _) in examples.items()},
            )
        )

        rng = seeded(seed, "algebra.associator")
        bad = 0
        for _ in range(samples):
            x, y, z = (random_imaginary(rng) for _ in range(3))
            value = associator(x, y, z)
            if not value.is_imaginary() or not associator(x, x, y).is_zero() or not triple_cross(x, x, z).is_zero():
                bad += 1
        checks.append(
            make_check("algebra.associator_alternating", "associator lies in the imaginary part", bad == 0, expected=0, computed=bad)
        )
        return report


class FormsService:
    @staticmethod
    def report(seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        report = VerificationReport(suite="forms", seed=seed, samples=samples)
        unit = Octonion.unit()
        checks = report.checks
        printed = load_named_forms("phi_terms.txt")

        for name, table in (("phi", phi_table()), ("star_phi", star_phi_table())):
            checks.append(
                make_check(f"forms.{name}_expansion", f"{name} coefficient list", table == printed[name], printed[name], table)
            )

        chi = chi_component_tables()
        printed_chi = load_forms("linear_forms.txt")
        checks.append(
            make_check(
                "forms.chi_components",
                "chi components",
                all(chi[m] == printed_chi[m] for m in range(1, 8)),
                expected=printed_chi,
                computed=chi,
            )
        )

        raw = chi_coefficient_tables()
        rescaled = {m: {t: value * oct_norm(e(m)) for t, value in raw[m].items()} for m in range(1, 8)}
        checks.append(
            make_check(
                "forms.chi_coefficient_convention",
                "chi components",
                rescaled == chi,
                expected=chi,
                computed=rescaled,
                note="pairings <chi, e_m> equal the e_m coefficients times N(e_m)",
            )
        )

        constant, uniform = calibration_constant()
        checks.append(
            make_check(
                "forms.calibration_uniform",
                "x*y*z = phi e + c [x,y,z]",
                uniform,
                expected=True,
                computed=uniform,
                note="one constant fits all 35 basis triples",
            )
        )
        checks.append(
            make_check(
                "forms.calibration_constant",
                "x*y*z = phi e + c [x,y,z]",
                constant == gq(1),
                expected=gq(1),
                computed=constant,
                corrected=constant,
            )
        )
        constant = constant if constant is not None else gq(1)

        basis_triples = [tuple(e(i) for i in t) for t in combinations(range(1, 8), 3)]
        rng = seeded(seed, "forms.orthogonal")
        orthogonal = basis_triples + [orthogonal_triple(rng) for _ in range(samples)]

        def norm_identity_failures(c):
            return sum(
                1
                for x, y, z in orthogonal
                if associative_triple_norm(x, y, z, c) != oct_norm(x) * oct_norm(y) * oct_norm(z)
            )

        bad = norm_identity_failures(constant)
        checks.append(
            make_check(
                "forms.associator_norm_identity",
                "phi^2 + N(c [x,y,z]) = N(x)N(y)N(z)",
                bad == 0,
                expected=0,
                computed=bad,
                note=f"{len(orthogonal)} orthogonal triples with the computed constant",
            )
        )
        bad_printed = norm_identity_failures(gq(1))
        checks.append(
            make_check(
                "forms.associator_norm_identity_printed",
                "phi^2 + N([x,y,z]) = N(x)N(y)N(z)",
                bad_printed == 0,
                expected=0,
                computed=bad_printed,
                corrected=f"phi^2 + N({format_gauss(constant)} [x,y,z])",
            )
        )

        rng = seeded(seed, "forms.gram")
        general = [tuple(random_imaginary(rng) for _ in range(3)) for _ in range(samples)]
        bad = sum(1 for x, y, z in general if associative_triple_norm(x, y, z, constant) != gram_determinant([x, y, z]))
        checks.append(
            make_check(
                "forms.gram_identity",
                "phi^2 + N(c [x,y,z]) = Gram determinant",
                bad == 0,
                expected=0,
                computed=bad,
            )
        )

        bad = sum(1 for x, y, z in orthogonal if oct_norm(triple_cross(x, y, z)) != oct_norm(x) * oct_norm(y) * oct_norm(z))
        checks.append(
            make_check("forms.triple_cross_norm_orthogonal", "N(x*y*z) = N(x)N(y)N(z)", bad == 0, expected=0, computed=bad)
        )
        bad = sum(1 for x, y, z in general if oct_norm(triple_cross(x, y, z)) != oct_norm(x) * oct_norm(y) * oct_norm(z))
        witness = oct_norm(triple_cross(unit, unit, unit))
        checks.append(
            make_check(
                "forms.triple_cross_norm_general",
                "N(x*y*z) = N(x)N(y)N(z)",
                bad == 0 and witness == oct_norm(unit),
                expected=oct_norm(unit),
                computed=witness,
                note=f"N(e*e*e) for x = y = z = e; {bad} of {len(general)} random imaginary triples fail",
            )
        )

        bad = []
        for t, (x, y, z) in zip(combinations(range(1, 8), 3), basis_triples):
            assoc = associator(x, y, z)
            value = phi3(x, y, z)
            if assoc.is_zero():
                ok = triple_cross(x, y, z) == unit.scale(value)
            else:
                ok = not value
            if not ok:
                bad.append(t)
        checks.append(
            make_check(
                "forms.associator_phi_dichotomy",
                "[x,y,z] = 0 or phi = 0 on basis triples",
                not bad,
                expected=[],
                computed=bad,
            )
        )

        planes = {"123": W0, "167": U0, "146": NON_ASSOCIATIVE}
        verdicts = {label: is_associative_plane(Plane3.coordinate(t)) for label, t in planes.items()}
        chi_zero = all(
            chi3(*plane_octonions(Plane3.coordinate(t))).is_zero() for label, t in planes.items() if verdicts[label]
        )
        expected = {"123": True, "167": True, "146": False}
        checks.append(
            make_check(
                "forms.associative_planes",
                "associative planes and chi",
                verdicts == expected and chi_zero,
                expected=expected,
                computed=verdicts,
                note="chi vanishes on every associative example" if chi_zero else "chi is nonzero on an associative plane",
            )
        )
        return report
