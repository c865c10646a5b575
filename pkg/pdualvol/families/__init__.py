#
# coding: utf-8
# Copyright (c) 2018 DATADVANCE
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""Polytope families with closed-form dual mixed volumes."""

from .associahedra import (
    InvalidTree, MandelstamTable, PlanarCubicTree, PlaneBinaryTree,
    amplitude_sign, associahedron_dmv, associahedron_geometric_dmv,
    associahedron_in_mandelstams, associahedron_names, associahedron_sequence,
    enumerate_plane_binary_trees, genperm_specialization, loday_vertex,
    pb_to_pc, phi3_amplitude, planar_cubic_trees
)
from .permutohedra import (
    GenpermReport, NotSpanningTree, check_spanning_tree,
    count_identity_cell, count_identity_total, generate_genperm_cells,
    genperm_cell_dmv, genperm_dmv_closed_form, genperm_geometric_dmv,
    genperm_names, genperm_sequence, genperm_subdivision, nonempty_subsets,
    verify_genperm_identities, verify_geometric_closed_form
)
from .workers import ordered_map
from .zonotopes import (
    InvalidGenerators, InvalidTiling, SplitResult, Zonotope,
    contraction_dual_volume, contraction_limits, deletion_contraction_split,
    dilation_dual_volume, generate_tiling, parallelotope_dmv,
    tiling_dmv, tiling_from_subdivision, validate_tiling,
    verify_contraction_limit, verify_deletion_contraction, zonotope_dmv
)
