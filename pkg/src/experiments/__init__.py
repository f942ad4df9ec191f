"""Experiment runners, one per command-line experiment."""

from ..config import Experiment
from .base import ExperimentResult
from .bethe import run_bethe
from .canopy_chain import run_canopy_chain
from .divisibility import run_divisibility
from .dos import run_dos
from .dos_convergence import run_dos_convergence
from .fm_decay import run_fm_decay
from .lyapunov import run_lyapunov
from .negligibility import run_negligibility
from .rrg_contrast import run_rrg_contrast
from .sc_build import run_sc_build
from .spacing import run_spacing
from .sw_diagnostic import run_sw_diagnostic
from .wegner_minami import run_wegner_minami

EXPERIMENT_RUNNERS = {
    Experiment.SPACING: run_spacing,
    Experiment.DOS: run_dos,
    Experiment.DOS_CONVERGENCE: run_dos_convergence,
    Experiment.WEGNER_MINAMI: run_wegner_minami,
    Experiment.NEGLIGIBILITY: run_negligibility,
    Experiment.DIVISIBILITY: run_divisibility,
    Experiment.LYAPUNOV: run_lyapunov,
    Experiment.FM_DECAY: run_fm_decay,
    Experiment.CANOPY_CHAIN: run_canopy_chain,
    Experiment.SC_BUILD: run_sc_build,
    Experiment.SW_DIAGNOSTIC: run_sw_diagnostic,
    Experiment.RRG_CONTRAST: run_rrg_contrast,
    Experiment.BETHE: run_bethe,
}

__all__ = [
    "ExperimentResult",
    "EXPERIMENT_RUNNERS"
]
