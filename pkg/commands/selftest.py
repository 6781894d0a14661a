import sys

import numpy as np
from tqdm import tqdm

from rings import build_ring
from utils.errors import ParameterError

from .base import CommandBase
from .registry import COMMAND_REGISTRY
from .schemas import SelftestRecord
from .suites import SUITE_REGISTRY, SuiteRun


@COMMAND_REGISTRY.register()
class Selftest(CommandBase):
    """Every property suite on every configured ring, seeded by cfg.SEED."""

    def check_cfg(self, cfg):
        super().check_cfg(cfg)
        for name in cfg.SELFTEST.SUITES:
            if name not in SUITE_REGISTRY.registered_names():
                raise ParameterError(
                    f"unknown suite {name!r}; choose from {SUITE_REGISTRY.registered_names()}"
                )

    def run(self):
        cfg = self.cfg
        specs = list(cfg.SELFTEST.RINGS) or [cfg.RING.SPEC]
        jobs = [(spec, name) for spec in specs for name in cfg.SELFTEST.SUITES]
        record = SelftestRecord(ring=", ".join(specs), seed=cfg.SEED)
        suite_options = {"independence": {"weight_multiples": list(cfg.MMATRIX.WEIGHT_MULTIPLES)}}
        # progress goes to stderr so stdout stays byte-identical between runs
        for i, (spec, name) in enumerate(tqdm(jobs, desc="selftest", file=sys.stderr)):
            ring = build_ring(spec)
            rng = np.random.default_rng([cfg.SEED, i])
            run = SuiteRun(name, ring)
            options = suite_options.get(name, {})
            SUITE_REGISTRY.get(name)(run, ring, rng, cfg.SELFTEST.SAMPLES, **options)
            result = run.result()
            record.results.append(result)
            record.total_passed += result.passed
            record.total_failed += result.failed
            print(f"{name:<14} {ring}: {result.passed} passed, {result.failed} failed")
            for failure in result.failures:
                self.problems.append(f"[{name} on {ring}] {failure}")
        print(f"selftest: {record.total_passed} passed, {record.total_failed} failed")
        return record
