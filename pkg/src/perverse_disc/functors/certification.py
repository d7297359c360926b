"""
Certificates for the equivalence between C and A2.

Every certify_* function is total: it never raises for bad input or a failed
check, it records violations instead. A certificate with no violations is
certified.
"""

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..domain import (
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    Violation,
    ViolationKind,
    compose_a2,
    compose_c,
    identity_a2,
    identity_c,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from ..errors import PerverseDiscError
from ..linalg import (
    LinearMap,
    Subspace,
    contains,
    image_basis,
    is_direct_sum,
    is_invertible,
    kernel_basis,
)
from .equivalence import s_on_morphism, s_on_object, t_on_morphism, t_on_object
from .natural import nat_iso_m, nat_iso_m_inv

ComposablePair = Union[Tuple[CMorphism, CMorphism], Tuple[A2Morphism, A2Morphism]]


@dataclass
class NaturalityCertificate:
    """Outcome of one theorem check on one input."""
    subject: str
    object_violations: List[Violation] = field(default_factory=list)
    morphism_violations: List[Violation] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return not self.object_violations and not self.morphism_violations

    @property
    def violations(self) -> List[Violation]:
        return self.object_violations + self.morphism_violations

    def report_lines(self) -> List[str]:
        if self.certified:
            return [f"certified {self.subject}"]
        return [f"failed {self.subject}"] + [f"{self.subject}: {v}" for v in self.violations]


@contextmanager
def _recording(sink: List[Violation], location: str) -> Iterator[None]:
    """Turn a raised package error into a recorded violation."""
    try:
        yield
    except PerverseDiscError as exc:
        sink.append(Violation(ViolationKind.INVALID_INPUT, location, str(exc)))


def _compare(sink: List[Violation], location: str, got: object, expected: object) -> None:
    if got != expected:
        sink.append(Violation(ViolationKind.DATA_MISMATCH, location, f"{got} != {expected}"))


def _compare_a2_morphisms(
    sink: List[Violation], location: str, got: A2Morphism, expected: A2Morphism
) -> None:
    if got.source != expected.source or got.target != expected.target:
        sink.append(Violation(ViolationKind.DATA_MISMATCH, location, "endpoints differ"))
    for name in ("e_minus", "e_zero", "e_plus"):
        _compare(sink, f"{location}.{name}", getattr(got, name), getattr(expected, name))


def _compare_c_morphisms(
    sink: List[Violation], location: str, got: CMorphism, expected: CMorphism
) -> None:
    if got.source != expected.source or got.target != expected.target:
        sink.append(Violation(ViolationKind.DATA_MISMATCH, location, "endpoints differ"))
    _compare(sink, f"{location}.map", got.map, expected.map)


def certify_ts_identity(
    x: CObject, morphisms: Sequence[CMorphism] = ()
) -> NaturalityCertificate:
    """T(S(x)) = x as data, and T(S(f)) = f for each supplied morphism."""
    cert = NaturalityCertificate("ts-identity")
    invalid = validate_c_object(x)
    if invalid:
        cert.object_violations += [v.prefixed("input") for v in invalid]
        return cert

    with _recording(cert.object_violations, "TS(x)"):
        ts = t_on_object(s_on_object(x))
        for name in ("ambient_dim", "a1", "a2", "b1", "b2"):
            _compare(cert.object_violations, f"TS(x).{name}", getattr(ts, name), getattr(x, name))

    for index, f in enumerate(morphisms):
        location = f"morphism[{index}]"
        with _recording(cert.morphism_violations, location):
            _compare_c_morphisms(
                cert.morphism_violations, f"TS({location})", t_on_morphism(s_on_morphism(f)), f
            )
    return cert


def certify_st_isomorphism(e: A2Object) -> NaturalityCertificate:
    """M(e) and M(e)⁻¹ are A2 morphisms inverse to each other."""
    cert = NaturalityCertificate("st-isomorphism")
    invalid = validate_a2_object(e)
    if invalid:
        cert.object_violations += [v.prefixed("input") for v in invalid]
        return cert

    sink = cert.object_violations
    with _recording(sink, "M(e)"):
        forward, backward = nat_iso_m(e), nat_iso_m_inv(e)
        sink += [v.prefixed("M") for v in validate_a2_morphism(forward)]
        sink += [v.prefixed("M⁻¹") for v in validate_a2_morphism(backward)]
        if not sink:
            _compare_a2_morphisms(sink, "M⁻¹∘M", compose_a2(backward, forward), identity_a2(e))
            _compare_a2_morphisms(
                sink, "M∘M⁻¹", compose_a2(forward, backward), identity_a2(forward.target)
            )
        for sign in ("minus", "plus"):
            delta: LinearMap = getattr(e, f"delta_{sign}")
            gamma: LinearMap = getattr(e, f"gamma_{sign}")
            _compare(sink, f"gamma_{sign}∘delta_{sign}∘gamma_{sign}", gamma @ delta @ gamma, gamma)
            _compare(sink, f"delta_{sign}∘gamma_{sign}∘delta_{sign}", delta @ gamma @ delta, delta)
    return cert


def certify_naturality(f: A2Morphism) -> NaturalityCertificate:
    """ST(f)∘M(source) = M(target)∘f componentwise."""
    cert = NaturalityCertificate("naturality")
    invalid = validate_a2_morphism(f)
    if invalid:
        cert.morphism_violations += [v.prefixed("input") for v in invalid]
        return cert

    with _recording(cert.morphism_violations, "ST(f)"):
        left = compose_a2(s_on_morphism(t_on_morphism(f)), nat_iso_m(f.source))
        right = compose_a2(nat_iso_m(f.target), f)
        _compare_a2_morphisms(cert.morphism_violations, "ST(f)∘M", left, right)
    return cert


def _s_functor_laws(sink: List[Violation], location: str, f: CMorphism, g: CMorphism) -> None:
    _compare_a2_morphisms(
        sink,
        f"{location} S(g∘f)",
        s_on_morphism(compose_c(g, f)),
        compose_a2(s_on_morphism(g), s_on_morphism(f)),
    )
    for name, obj in (("x", f.source), ("y", f.target), ("z", g.target)):
        _compare_a2_morphisms(
            sink, f"{location} S(id_{name})", s_on_morphism(identity_c(obj)),
            identity_a2(s_on_object(obj)),
        )


def _t_functor_laws(sink: List[Violation], location: str, f: A2Morphism, g: A2Morphism) -> None:
    _compare_c_morphisms(
        sink,
        f"{location} T(g∘f)",
        t_on_morphism(compose_a2(g, f)),
        compose_c(t_on_morphism(g), t_on_morphism(f)),
    )
    for name, obj in (("x", f.source), ("y", f.target), ("z", g.target)):
        _compare_c_morphisms(
            sink, f"{location} T(id_{name})", t_on_morphism(identity_a2(obj)),
            identity_c(t_on_object(obj)),
        )


def certify_functoriality(pairs: Iterable[ComposablePair]) -> NaturalityCertificate:
    """S and T preserve composition and identities on each pair (f, g), g∘f defined."""
    cert = NaturalityCertificate("functoriality")
    sink = cert.morphism_violations
    for index, (f, g) in enumerate(pairs):
        location = f"pair[{index}]"
        with _recording(sink, location):
            if isinstance(f, CMorphism) and isinstance(g, CMorphism):
                _s_functor_laws(sink, location, f, g)
            elif isinstance(f, A2Morphism) and isinstance(g, A2Morphism):
                _t_functor_laws(sink, location, f, g)
            else:
                sink.append(
                    Violation(ViolationKind.INVALID_INPUT, location, "pair mixes categories")
                )
    return cert


def certify_s_well_defined(
    x: CObject, morphisms: Sequence[CMorphism] = ()
) -> NaturalityCertificate:
    """S(x) is an A2 object (π2∘i1, π1∘i2 invertible) and S(φ) an A2 morphism.

    For morphisms the projection squares are also checked in V-coordinates:
    j_k∘ρ_k∘φ = φ∘i_k∘π_k.
    """
    cert = NaturalityCertificate("lemma-one")
    invalid = validate_c_object(x)
    if invalid:
        cert.object_violations += [v.prefixed("input") for v in invalid]
        return cert

    sink = cert.object_violations
    with _recording(sink, "S(x)"):
        e = s_on_object(x)
        sink += [v.prefixed("S(x)") for v in validate_a2_object(e)]
        for location, composite in (
            ("pi2∘i1", e.gamma_plus @ e.delta_minus),
            ("pi1∘i2", e.gamma_minus @ e.delta_plus),
        ):
            if not is_invertible(composite):
                sink.append(Violation(ViolationKind.NOT_INVERTIBLE, location, str(composite)))

    for index, phi in enumerate(morphisms):
        location = f"morphism[{index}]"
        msink = cert.morphism_violations
        with _recording(msink, location):
            s_phi = s_on_morphism(phi)
            msink += [v.prefixed(f"S({location})") for v in validate_a2_morphism(s_phi)]
            for k in ("1", "2"):
                src, tgt = s_phi.source, s_phi.target
                sign = "minus" if k == "1" else "plus"
                rho = getattr(tgt, f"gamma_{sign}")
                j = getattr(tgt, f"delta_{sign}")
                i = getattr(src, f"delta_{sign}")
                pi = getattr(src, f"gamma_{sign}")
                _compare(
                    msink, f"{location} j{k}∘rho{k}∘φ = φ∘i{k}∘pi{k}",
                    j @ rho @ phi.map, phi.map @ i @ pi,
                )
    return cert


def _embedded(f: LinearMap, s: Subspace) -> Subspace:
    return Subspace.span(f.matrix @ s.basis)


def certify_t_well_defined(
    e: A2Object, morphisms: Sequence[A2Morphism] = ()
) -> NaturalityCertificate:
    """T(e) is a C object and T(f) a C morphism.

    The four decompositions of E0 are checked by name, including the cross
    cases im delta+ ⊕ ker gamma- and im delta- ⊕ ker gamma+.
    """
    cert = NaturalityCertificate("lemma-two")
    invalid = validate_a2_object(e)
    if invalid:
        cert.object_violations += [v.prefixed("input") for v in invalid]
        return cert

    sink = cert.object_violations
    with _recording(sink, "T(e)"):
        c = t_on_object(e)
        sink += [v.prefixed("T(e)") for v in validate_c_object(c)]
        for image_name, kernel_name in (
            ("delta_minus", "gamma_minus"),
            ("delta_plus", "gamma_plus"),
            ("delta_plus", "gamma_minus"),
            ("delta_minus", "gamma_plus"),
        ):
            image = image_basis(getattr(e, image_name))
            kernel = kernel_basis(getattr(e, kernel_name))
            if not is_direct_sum(image, kernel):
                sink.append(
                    Violation(
                        ViolationKind.INTERSECTION_NONZERO,
                        f"im {image_name} ⊕ ker {kernel_name}",
                        "not a decomposition of E0",
                    )
                )

    for index, f in enumerate(morphisms):
        location = f"morphism[{index}]"
        msink = cert.morphism_violations
        with _recording(msink, location):
            t_f = t_on_morphism(f)
            msink += [v.prefixed(f"T({location})") for v in validate_c_morphism(t_f)]
            for sign in ("minus", "plus"):
                kernel_src = kernel_basis(getattr(f.source, f"gamma_{sign}"))
                kernel_tgt = kernel_basis(getattr(f.target, f"gamma_{sign}"))
                if not contains(kernel_tgt, _embedded(f.e_zero, kernel_src)):
                    msink.append(
                        Violation(
                            ViolationKind.CONTAINMENT_FAILED,
                            f"{location} e_zero(ker gamma_{sign}) ⊆ ker xi_{sign}",
                        )
                    )
                image_src = image_basis(getattr(f.source, f"delta_{sign}"))
                image_tgt = image_basis(getattr(f.target, f"delta_{sign}"))
                if not contains(image_tgt, _embedded(f.e_zero, image_src)):
                    msink.append(
                        Violation(
                            ViolationKind.CONTAINMENT_FAILED,
                            f"{location} e_zero(im delta_{sign}) ⊆ im eta_{sign}",
                        )
                    )
    return cert
