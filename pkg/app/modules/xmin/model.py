"""X_min as the Grassmannian cut by the seven linear forms <chi(., ., .), e_m>."""

import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy.polys.matrices import DomainMatrix

from app.core.errors import ZeroTrivectorError
from app.fixtures.loader import load_forms
from app.modules.grassmann.exterior import TRIPLES, Covector3, TriIndex, TriVector, is_decomposable
from app.modules.octonion.basis import BasisTag
from app.modules.octonion.forms import chi_component_tables
from app.modules.scalars.gauss import GaussQ
from app.modules.scalars.linalg import mat_rank, matrix

logger = logging.getLogger("xmin.model")


@dataclass(frozen=True)
class XminModel:
    covectors_e: tuple[Covector3, ...]
    covectors_tilde: tuple[Covector3, ...]
    printed_e: tuple[Covector3, ...]
    printed_tilde: tuple[Covector3, ...]

    def covectors(self, basis: BasisTag) -> tuple[Covector3, ...]:
        if basis == BasisTag.E:
            return self.covectors_e
        if basis == BasisTag.TILDE:
            return self.covectors_tilde
        raise ValueError("the linear forms live on E or TILDE Pluecker coordinates")

    def rank(self) -> int:
        return mat_rank(covector_matrix(self.covectors_e))


def covector_matrix(covectors) -> DomainMatrix:
    return matrix([list(c.coords) for c in covectors], ncols=35)


def _printed(name: str, basis: BasisTag) -> tuple[Covector3, ...]:
    forms = load_forms(name)
    return tuple(Covector3.from_terms(forms[m], basis) for m in sorted(forms))


@lru_cache(maxsize=None)
def build_model() -> XminModel:
    tables = chi_component_tables()
    covectors_e = tuple(Covector3.from_terms(tables[m], BasisTag.E) for m in range(1, 8))
    model = XminModel(
        covectors_e=covectors_e,
        covectors_tilde=tuple(c.to(BasisTag.TILDE) for c in covectors_e),
        printed_e=_printed("linear_forms.txt", BasisTag.E),
        printed_tilde=_printed("tilde_forms.txt", BasisTag.TILDE),
    )
    logger.debug("built X_min model with %d linear forms", len(covectors_e))
    return model


def proportionality(derived: Covector3, printed: Covector3) -> GaussQ | None:
    """The r with printed = r * derived, or None."""
    pivot = next((k for k, value in enumerate(derived.coords) if value), None)
    if pivot is None:
        return None
    ratio = printed.coords[pivot] / derived.coords[pivot]
    if all(ratio * a == b for a, b in zip(derived.coords, printed.coords)):
        return ratio
    return None


def linear_values(w: TriVector, model: XminModel | None = None) -> list[GaussQ]:
    model = model or build_model()
    return [c.pair(w) for c in model.covectors(w.basis)]


def xmin_member(w: TriVector, model: XminModel | None = None) -> bool:
    if w.is_zero():
        raise ZeroTrivectorError("membership is undefined for the zero trivector")
    if any(linear_values(w, model)):
        return False
    return is_decomposable(w)[0]


def coordinate_members(basis: BasisTag = BasisTag.TILDE, model: XminModel | None = None) -> list[TriIndex]:
    """Coordinate 3-planes on which every linear form vanishes."""
    covectors = (model or build_model()).covectors(basis)
    return [t for rank, t in enumerate(TRIPLES) if not any(c.coords[rank] for c in covectors)]
