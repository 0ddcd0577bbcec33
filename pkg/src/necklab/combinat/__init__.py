#    Copyright 2026 necklab developers
#
#    This file is part of necklab.
#
#    necklab is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Lesser General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    necklab is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Lesser General Public License for more details.
#
#    You should have received a copy of the GNU Lesser General Public License
#    along with necklab.  If not, see <http://www.gnu.org/licenses/>.

from .words import (Word,
                    Composition,
                    Necklace,
                    MajTuple,
                    NuOrbit,
                    descent_set,
                    maj,
                    maj_n,
                    content,
                    period_freq,
                    necklace_of,
                    rotations,
                    flex,
                    enumerate_words,
                    enumerate_words_by_content,
                    enumerate_necklaces,
                    enumerate_necklaces_by_content,
                    count_necklaces,
                    bfmaj_nu,
                    maj_nu,
                    flex_ab,
                    maj_ab)
from .tableaux import (Partition,
                       PartitionTuple,
                       Tableau,
                       partitions,
                       partition_tuples,
                       rsk,
                       tableau_descents,
                       tableau_maj,
                       tableau_bfmaj_nu,
                       enumerate_syt,
                       enumerate_ssyt,
                       kostka_number,
                       a_coeff,
                       schur_expand_descent_class)
from .symfunc import (SymFunc,
                      s, h, e, p, mono,
                      convert,
                      multiply,
                      plethysm,
                      plethysm_by_substitution,
                      omega,
                      from_content_multiset)
from .characters import (CycleType,
                         IntPolyModQn,
                         NonInteger,
                         mn_character,
                         power_cycle_type,
                         ramanujan_sum,
                         eval_at_root,
                         induced_multiplicity,
                         syt_maj_polynomial)
from .csp import (CSPReport,
                  orbit_polynomial,
                  verify_csp,
                  verify_equidistribution,
                  random_rotation_closed_set)
from .liemodules import (VerificationReport,
                         MashReport,
                         kw_series,
                         cyclic_exponents,
                         stembridge_series,
                         ofd_content_gf,
                         mobius_f,
                         schocker,
                         wreath_char,
                         wreath_dim,
                         graded_frobenius,
                         higher_lie,
                         omega_identities,
                         check_mash_candidate,
                         symmetry_checks)
