"""KOSTKA main functions."""

from KOSTKA.branching import branching_fermionic
from KOSTKA.branching import branching_series
from KOSTKA.main import kostka
from KOSTKA.main import verify_all
from KOSTKA.paths import kostka_via_paths
from KOSTKA.rigged import kostka_via_rc
