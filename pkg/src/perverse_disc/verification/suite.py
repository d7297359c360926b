"""
Verification suite: run every certificate over seeded random samples.

Each sample family (C objects, A2 objects, morphisms, composable pairs, A1
pairs) draws from its own child stream split off one root generator, so the
samples depend only on the seed and the profile. Certification may run on a
thread pool; results are always collected in generation order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple, TypeVar

import structlog

from ..config.loader import SuiteProfile
from ..domain import (
    A1Object,
    Violation,
    ViolationKind,
    a1_symmetric_holds,
    validate_a1_object,
)
from ..functors import (
    NaturalityCertificate,
    certify_functoriality,
    certify_naturality,
    certify_s_well_defined,
    certify_st_isomorphism,
    certify_t_well_defined,
    certify_ts_identity,
)
from ..generation import GenConfig, ObjectFactory, SplitMix64
from ..linalg import determinant, identity

logger = structlog.get_logger(__name__)

T = TypeVar("T")

# Failed samples kept verbatim per check
MAX_REPORTED_FAILURES = 5

CHECK_NAMES = (
    "lemma-one",
    "lemma-one-morphisms",
    "lemma-two",
    "lemma-two-morphisms",
    "ts-identity",
    "ts-identity-morphisms",
    "st-isomorphism",
    "naturality",
    "functoriality",
    "a1-symmetry",
)


@dataclass(frozen=True)
class CheckResult:
    """Tally of one named check across its samples."""

    name: str
    total: int
    certified: int
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.certified == self.total

    def summary_line(self) -> str:
        return f"{self.name}: {self.certified}/{self.total} certified"


@dataclass(frozen=True)
class SuiteSummary:
    """All check results of one suite run."""

    seed: int
    profile: str
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def report_lines(self) -> List[str]:
        lines = [f"suite seed={self.seed} profile={self.profile}"]
        lines += [result.summary_line() for result in self.results]
        for result in self.results:
            lines += list(result.failures)
        lines.append("suite: passed" if self.passed else "suite: FAILED")
        return lines


def certify_a1_symmetry(a: A1Object) -> NaturalityCertificate:
    """The A1 validator agrees with a determinant oracle and with 1 - v∘u."""
    cert = NaturalityCertificate("a1-symmetry")
    verdict = not validate_a1_object(a)
    oracle = determinant(identity(a.m) - a.u @ a.v) != 0
    if verdict != oracle:
        cert.object_violations.append(
            Violation(
                ViolationKind.DATA_MISMATCH,
                "1 - u∘v",
                f"validator says {verdict}, determinant says {oracle}",
            )
        )
    if verdict != a1_symmetric_holds(a):
        cert.object_violations.append(
            Violation(ViolationKind.DATA_MISMATCH, "1 - v∘u", "verdicts on u∘v and v∘u differ")
        )
    return cert


class SuiteRunner:
    """Draws samples for a profile and certifies them check by check."""

    def __init__(self, profile: SuiteProfile, seed: int, workers: int = 1):
        if workers < 1:
            raise ValueError("workers must be at least 1")
        self.profile = profile
        self.seed = seed
        self.workers = workers
        self.progress_callbacks: List[Callable[[CheckResult], None]] = []

    def add_progress_callback(self, callback: Callable[[CheckResult], None]) -> None:
        """Called once per finished check, in order."""
        self.progress_callbacks.append(callback)

    def _factories(self) -> List[ObjectFactory]:
        config = GenConfig(
            seed=self.seed,
            max_ambient_dim=self.profile.max_ambient_dim,
            entry_bound=self.profile.entry_bound,
        )
        root = SplitMix64(self.seed)
        return [ObjectFactory(config, rng=root.split()) for _ in range(7)]

    def _certify(
        self,
        name: str,
        samples: Sequence[T],
        certify: Callable[[T], NaturalityCertificate],
    ) -> CheckResult:
        if self.workers > 1 and len(samples) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                certificates: Iterable[NaturalityCertificate] = list(pool.map(certify, samples))
        else:
            certificates = [certify(sample) for sample in samples]

        certified = 0
        failures: List[str] = []
        for index, cert in enumerate(certificates):
            if cert.certified:
                certified += 1
            elif len(failures) < MAX_REPORTED_FAILURES:
                failures += [f"{name}[{index}] {line}" for line in cert.report_lines()]

        result = CheckResult(name, len(samples), certified, tuple(failures))
        if result.passed:
            logger.info("check_finished", check=name, certified=certified, total=len(samples))
        else:
            logger.warning("check_failed", check=name, certified=certified, total=len(samples))
        for callback in self.progress_callbacks:
            callback(result)
        return result

    def run(self) -> SuiteSummary:
        """Generate every sample family, then run all checks in a fixed order."""
        profile = self.profile
        logger.info(
            "suite_started",
            seed=self.seed,
            profile=profile.name,
            objects=profile.objects,
            workers=self.workers,
        )

        c_gen, a2_gen, cm_gen, a2m_gen, cp_gen, a2p_gen, a1_gen = self._factories()
        c_objects = [c_gen.random_c_object() for _ in range(profile.objects)]
        a2_objects = [a2_gen.random_a2_object() for _ in range(profile.objects)]
        c_morphisms = [cm_gen.random_c_morphism() for _ in range(profile.morphisms)]
        a2_morphisms = [a2m_gen.random_a2_morphism() for _ in range(profile.morphisms)]
        c_pairs = [cp_gen.random_c_pair() for _ in range(profile.pairs)]
        a2_pairs = [a2p_gen.random_a2_pair() for _ in range(profile.pairs)]
        a1_objects = [a1_gen.random_a1_object() for _ in range(profile.a1_pairs)]
        logger.debug("samples_generated", seed=self.seed)

        results = (
            self._certify("lemma-one", c_objects, certify_s_well_defined),
            self._certify(
                "lemma-one-morphisms",
                c_morphisms,
                lambda f: certify_s_well_defined(f.source, (f,)),
            ),
            self._certify("lemma-two", a2_objects, certify_t_well_defined),
            self._certify(
                "lemma-two-morphisms",
                a2_morphisms,
                lambda f: certify_t_well_defined(f.source, (f,)),
            ),
            self._certify("ts-identity", c_objects, certify_ts_identity),
            self._certify(
                "ts-identity-morphisms",
                c_morphisms,
                lambda f: certify_ts_identity(f.source, (f,)),
            ),
            self._certify("st-isomorphism", a2_objects, certify_st_isomorphism),
            self._certify("naturality", a2_morphisms, certify_naturality),
            self._certify(
                "functoriality",
                [*c_pairs, *a2_pairs],
                lambda pair: certify_functoriality([pair]),
            ),
            self._certify("a1-symmetry", a1_objects, certify_a1_symmetry),
        )

        summary = SuiteSummary(self.seed, profile.name, results)
        logger.info("suite_finished", seed=self.seed, passed=summary.passed)
        return summary
