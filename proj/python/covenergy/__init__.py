"""Minimum 3-path coverings, covering matrices and covering energy."""

from ._core import (
    CoverError,
    EnergyReport,
    Graph,
    RadicandReport,
    char_poly,
    characterization_holds,
    check_distance_theorems,
    classify_noncovered_edges,
    classify_vertex,
    covering_energy,
    covering_matrix,
    distance_to_set,
    eigenvalues,
    enumerate_p3,
    gen_complete,
    gen_path,
    gen_random,
    gen_star_rays,
    is_2_covering,
    is_3_covering,
    is_connected,
    min_2_covering_exact,
    min_3_covering_bruteforce,
    min_3_covering_exact,
    pendant_vertices,
    radicand_discrepancy_report,
    solve_cubic_real,
    star1_energy_closed,
    star3_char_poly,
    star3_energy_closed,
    star3_spectrum_closed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
