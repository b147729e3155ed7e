// Generated by tools/gen_fixture_groups.py; do not edit.
#include "fixture_data.hpp"

namespace semiprim::fixture_data {

char const* const heawood = R"json({"name": "heawood", "order": 336, "vertices": 14, "edges": [[0, 1], [0, 5], [0, 13], [1, 2], [1, 10], [2, 3], [2, 7], [3, 4], [3, 12], [4, 5], [4, 9], [5, 6], [6, 7], [6, 11], [7, 8], [8, 9], [8, 13], [9, 10], [10, 11], [11, 12], [12, 13]], "generators": [[0, 1, 10, 9, 4, 5, 6, 11, 12, 3, 2, 7, 8, 13], [0, 1, 10, 11, 12, 13, 8, 9, 4, 3, 2, 7, 6, 5], [0, 5, 4, 3, 2, 1, 10, 9, 8, 7, 6, 11, 12, 13], [1, 0, 5, 4, 3, 2, 7, 6, 11, 12, 13, 8, 9, 10]]})json";

char const* const tutte_coxeter = R"json({"name": "tutte_coxeter", "order": 1440, "vertices": 30, "edges": [[0, 1], [0, 17], [0, 29], [1, 2], [1, 22], [2, 3], [2, 9], [3, 4], [3, 26], [4, 5], [4, 13], [5, 6], [5, 18], [6, 7], [6, 23], [7, 8], [7, 28], [8, 9], [8, 15], [9, 10], [10, 11], [10, 19], [11, 12], [11, 24], [12, 13], [12, 29], [13, 14], [14, 15], [14, 21], [15, 16], [16, 17], [16, 25], [17, 18], [18, 19], [19, 20], [20, 21], [20, 27], [21, 22], [22, 23], [23, 24], [24, 25], [25, 26], [26, 27], [27, 28], [28, 29]], "generators": [[0, 1, 2, 3, 4, 13, 14, 15, 8, 9, 10, 19, 18, 5, 6, 7, 28, 29, 12, 11, 24, 23, 22, 21, 20, 27, 26, 25, 16, 17], [0, 1, 2, 3, 26, 25, 24, 11, 10, 9, 8, 7, 28, 27, 20, 19, 18, 17, 16, 15, 14, 21, 22, 23, 6, 5, 4, 13, 12, 29], [0, 1, 2, 9, 8, 7, 6, 5, 4, 3, 26, 25, 16, 15, 14, 13, 12, 29, 28, 27, 20, 21, 22, 23, 24, 11, 10, 19, 18, 17], [0, 1, 22, 23, 6, 7, 8, 15, 14, 21, 20, 19, 18, 5, 4, 13, 12, 29, 28, 27, 26, 3, 2, 9, 10, 11, 24, 25, 16, 17], [0, 29, 28, 7, 6, 5, 4, 3, 26, 27, 20, 21, 22, 23, 24, 25, 16, 17, 18, 19, 10, 11, 12, 13, 14, 15, 8, 9, 2, 1], [1, 0, 17, 16, 15, 8, 7, 6, 5, 18, 19, 20, 21, 14, 13, 4, 3, 2, 9, 10, 11, 12, 29, 28, 27, 26, 25, 24, 23, 22]]})json";

char const* const petersen = R"json({"name": "petersen", "order": 120, "vertices": 10, "edges": [[0, 1], [0, 4], [0, 5], [1, 2], [1, 6], [2, 3], [2, 7], [3, 4], [3, 8], [4, 9], [5, 7], [5, 8], [6, 8], [6, 9], [7, 9]], "generators": [[0, 1, 2, 7, 5, 4, 6, 3, 9, 8], [0, 1, 6, 8, 5, 4, 2, 9, 3, 7], [0, 4, 3, 2, 1, 5, 9, 8, 7, 6], [1, 0, 4, 3, 2, 6, 5, 9, 8, 7]]})json";

}  // namespace semiprim::fixture_data
