"""String rewriting over monoid presentations with square-cell witnesses.

The package computes normal forms and critical branchings, completes a
convergent presentation with one square generator per critical branching,
and synthesizes explicit cell terms filling arbitrary shells of rewriting
zig-zags.  Every synthesized witness is validated by an independent face
checker.
"""

from .branching import (ASPHERICAL, OVERLAPPING, PEIFFER, Branching,
                        classify_branching, critical_branchings,
                        local_branchings)
from .cube import (EPS1, EPS2, GAMMA_MINUS, GAMMA_PLUS, HORIZONTAL, PRODUCT,
                   S1, S2, T, VERTICAL, CellTerm, Shell, check_shell, compose,
                   degenerate, eps1, eps2, face_mismatches, faces, format_cell,
                   gamma_minus, gamma_plus, gen, id2, parse_cell, rotate,
                   validate_filler)
from .errors import (FaceMismatchError, FuelExhaustedError,
                     IncompleteCompletionError, ParseError, PreconditionError,
                     RewritingError, TerminationOrderError)
from .fileformat import (PolygraphFile, parse_polygraph, parse_shell,
                         serialize_polygraph)
from .polygraph import (Polygraph, SquareGen, Violation, is_valid,
                        make_polygraph, validate_polygraph)
from .rewrite import (LEFTMOST, RIGHTMOST, Path, RewriteStep, Rule, SignedStep,
                      ZigZag, applicable_steps, identity_path, identity_zigzag,
                      is_normal_form, normalize, path_product,
                      verify_termination_order, zigzag)
from .squier import (Completion, fill_shell, fill_square, fill_zigzag,
                     local_filler, squier_completion, step_zigzag)
from .words import (Overlap, Word, concat, find_occurrences, format_word,
                    overlaps, parse_word)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
