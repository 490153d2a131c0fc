"""Finite frames, their sublocales and localic maps, β/λ reflections, and
selection-based map predicates, with exhaustive suites over small frames."""
from __future__ import annotations

from .catalog import CatalogEntry, enumerate_homs, generate_catalog, resolve_frame_id
from .classifiers import frame_class, frame_classes, parametric_class, table_audit
from .embeddings import EmbeddedSublocale, booleanization, embedding_class, section5_audit
from .errors import (
    CapExceeded,
    FrameError,
    FrameMismatch,
    GuardExceeded,
    LiftNotRegular,
    LocaleLabError,
    ModeRequiresComplemented,
    NotAHom,
)
from .frame import Frame, builtin, frame_from_pairs, validate_frame
from .maps import FrameHom, LocalicMap, image, map_class, map_classes, preimage
from .reflections import frame_props, lift_hom, reflect
from .selections import (
    CLOSED,
    COZERO,
    OPEN,
    REG_CLOSED,
    REG_OPEN,
    STANDARD,
    ZERO,
    Selection,
    is_S_beta_map_thm,
    is_S_gamma_map,
    is_S_lambda_map_thm,
    is_ST_lambda_map,
    selection,
)
from .sublocales import Sublocale, closed_sublocale, completely_separated, enumerate_sublocales, open_sublocale
from .suites import SUITES, SuiteConfig, SuiteReport, run_suite

__version__ = "0.1.0"
