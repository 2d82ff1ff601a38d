"""
==========================
Year: 2026
==========================
This module contains the analysis configuration, the enumerations used by the analysis pipelines and the exceptions
raised across the core modules.
"""

import math
from enum import Enum
from typing import Optional, Tuple


class FracVulnError(Exception):
    pass


class GraphError(FracVulnError):
    pass


class SelfLoopError(GraphError):

    def __init__(self, label):
        super().__init__(f"Self-loop on vertex '{label}' is not allowed")
        self.labels = (label, label)


class EmptyGraphError(GraphError):
    pass


class EdgeListError(GraphError):

    def __init__(self, line_number, message):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


class ParameterError(FracVulnError, ValueError):
    pass


class ConfigError(FracVulnError):
    pass


class UndefinedMetricError(FracVulnError):
    pass


class FitError(FracVulnError):
    pass


class IndistinguishableError(FracVulnError):
    """
    Raised when two graphs have the same b_p for every exponent that was tried. Carries the curves so callers can
    still report them.
    """

    def __init__(self, message, f_curve, bp_curve_a, bp_curve_b):
        super().__init__(message)
        self.f_curve = f_curve
        self.bp_curve_a = bp_curve_a
        self.bp_curve_b = bp_curve_b


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'
    TABLE = 'table'


class TieRule(Enum):
    SMALLEST_INDEX = 'smallest-index'
    SEEDED_RANDOM = 'seeded-random'


class FitAggregate(Enum):
    MEAN = 'mean'
    LOG_MEAN = 'logmean'


def parse_option(enum_class, value):
    if isinstance(value, enum_class):
        return value
    for member in enum_class:
        if member.value == str(value).lower():
            return member
    options = ", ".join(member.value for member in enum_class)
    raise ConfigError(f"Unknown {enum_class.__name__} '{value}'. Expected one of: {options}")


class AnalysisConfig:
    name: str
    box_runs: int
    seed: int
    p_max: int
    tie_eps: float
    attack_fraction: float
    fit_range: Optional[Tuple[Optional[int], Optional[int]]]
    fit_aggregate: FitAggregate
    output_format: OutputFormat
    normalized_compare: bool
    tie_rule: TieRule
    rank_p: float

    def __init__(self, name="default", box_runs=100, seed=42, p_max=50, tie_eps=1e-12, attack_fraction=0.01,
                 fit_range=None, fit_aggregate=FitAggregate.MEAN, output_format=OutputFormat.JSON,
                 normalized_compare=False, tie_rule=TieRule.SMALLEST_INDEX, rank_p=2.0):
        self.name = name
        self.box_runs = box_runs
        self.seed = seed
        self.p_max = p_max
        self.tie_eps = tie_eps
        self.attack_fraction = attack_fraction
        self.fit_range = fit_range
        self.fit_aggregate = parse_option(FitAggregate, fit_aggregate)
        self.output_format = parse_option(OutputFormat, output_format)
        self.normalized_compare = normalized_compare
        self.tie_rule = parse_option(TieRule, tie_rule)
        self.rank_p = rank_p

    def validate(self):
        """
        :return: this configuration, or raises ConfigError naming the first invalid field.
        """
        if not isinstance(self.box_runs, int) or self.box_runs < 1:
            raise ConfigError(f"box_runs must be a positive integer, got {self.box_runs!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 32:
            raise ConfigError(f"seed must be an integer in [0, 2^32), got {self.seed!r}")
        if not isinstance(self.p_max, int) or self.p_max < 1:
            raise ConfigError(f"p_max must be a positive integer, got {self.p_max!r}")
        if not self.tie_eps >= 0:
            raise ConfigError(f"tie_eps must be non-negative, got {self.tie_eps!r}")
        if not 0 < self.attack_fraction < 1:
            raise ConfigError(f"attack_fraction must lie in (0, 1), got {self.attack_fraction!r}")
        if not (math.isfinite(self.rank_p) and self.rank_p > 0):
            raise ConfigError(f"rank_p must be a positive number, got {self.rank_p!r}")
        if self.fit_range is not None:
            lo, hi = self.fit_range
            for bound in (lo, hi):
                if bound is not None and (not isinstance(bound, int) or bound < 1):
                    raise ConfigError(f"fit range bounds must be positive box sizes, got {self.fit_range!r}")
            if lo is not None and hi is not None and hi <= lo:
                raise ConfigError(f"fit range upper bound must exceed the lower bound, got {self.fit_range!r}")
        return self

    def to_json(self):
        return {
            'name': self.name,
            'box_runs': self.box_runs,
            'seed': self.seed,
            'p_max': self.p_max,
            'tie_eps': self.tie_eps,
            'attack_fraction': self.attack_fraction,
            'fit_range': list(self.fit_range) if self.fit_range is not None else None,
            'fit_aggregate': self.fit_aggregate.value,
            'output_format': self.output_format.value,
            'normalized_compare': self.normalized_compare,
            'tie_rule': self.tie_rule.value,
            'rank_p': self.rank_p
        }

    @staticmethod
    def from_json(data, base=None):
        """
        :param data: dict as produced by to_json(). Missing keys keep the value of base.
        :param base: configuration to start from, the built-in defaults if None.
        """
        config = AnalysisConfig(**(base or AnalysisConfig()).to_json_kwargs())
        known = set(config.to_json().keys())
        unknown = set(data.keys()) - known
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(sorted(unknown))}")
        for key, value in data.items():
            if key == 'fit_range':
                value = tuple(value) if value is not None else None
                if value is not None and len(value) != 2:
                    raise ConfigError(f"fit_range must hold two bounds, got {value!r}")
            elif key == 'fit_aggregate':
                value = parse_option(FitAggregate, value)
            elif key == 'output_format':
                value = parse_option(OutputFormat, value)
            elif key == 'tie_rule':
                value = parse_option(TieRule, value)
            setattr(config, key, value)
        return config.validate()

    def to_json_kwargs(self):
        kwargs = self.to_json()
        kwargs['fit_range'] = tuple(self.fit_range) if self.fit_range is not None else None
        return kwargs

    def copy(self, **changes):
        kwargs = self.to_json_kwargs()
        kwargs.update(changes)
        return AnalysisConfig(**kwargs)
