// Copyright 2026 The quatrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Built-in copy of data/realforms.tsv so the tools work without an install
// step. A test keeps the two byte-identical.

#ifndef QUATREP_CATALOG_DATA_HPP_
#define QUATREP_CATALOG_DATA_HPP_

namespace quatrep {

inline constexpr const char* kBuiltinRealFormCatalog =
    R"(# quatrep real-form catalog, format v1
# One record per exceptional real form. Classical families (su, sl, so, sp,
# so*) are parameterized and constructed from their Satake-Tits rules at
# lookup time; see README.md for the rules and for this file's field grammar.
#
# Fields (tab-separated):
#   name	type	involution	compact	qset	provenance
# involution: twisted Galois action as 2-cycles "a:b" joined by ",", "-" = id
# compact:    compact (black) nodes, comma-separated 1-based Bourbaki, "-" = none
# qset:       nodes whose fundamental representation is quaternionic, "-" = none
name	type	involution	compact	qset	provenance
e6(6)	E6	-	-	-	standard-tables
e6(2)	E6	1:6,3:5	-	-	paper-table1
e6(-14)	E6	1:6,3:5	3,4,5	-	standard-tables
e6(-26)	E6	-	2,3,4,5	-	standard-tables
e6(-78)	E6	1:6,3:5	1,2,3,4,5,6	-	standard-tables
e7(7)	E7	-	-	-	standard-tables
e7(-5)	E7	-	2,5,7	2,5,7	paper-table2
e7(-25)	E7	-	2,3,4,5	-	standard-tables
e7(-133)	E7	-	1,2,3,4,5,6,7	2,5,7	paper-table2
e8(8)	E8	-	-	-	standard-tables
e8(-24)	E8	-	2,3,4,5	-	paper-table1
e8(-248)	E8	-	1,2,3,4,5,6,7,8	-	standard-tables
f4(4)	F4	-	-	-	paper-table1
f4(-20)	F4	-	1,2,3	-	standard-tables
f4(-52)	F4	-	1,2,3,4	-	standard-tables
g2(2)	G2	-	-	-	paper-table1
g2(-14)	G2	-	1,2	-	standard-tables
)";

}  // namespace quatrep

#endif  // QUATREP_CATALOG_DATA_HPP_
