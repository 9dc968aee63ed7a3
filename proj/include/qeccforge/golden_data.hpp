#ifndef QECCFORGE_GOLDEN_DATA_HPP
#define QECCFORGE_GOLDEN_DATA_HPP

#include <array>
#include <string_view>

namespace qeccforge::golden_data {

struct File {
  std::string_view name;
  std::string_view text;
};

// Keep in sync with data/golden; a test compares the two byte for byte.
inline constexpr std::array<File, 10> files{{
    {"steane.code", R"GOLDEN(# [7,4,3] Hamming code
alphabet qary 2
0000000
0001111
0010011
0011100
0100101
0101010
0110110
0111001
1000110
1001001
1010101
1011010
1100011
1101100
1110000
1111111
)GOLDEN"},
    {"steane.expected.json", R"GOLDEN({
 "q": 2,
 "n": 7,
 "d_x": 3,
 "d_z": 3,
 "alphabet": "qary 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      0,
      0,
      0,
      0,
      0,
      0,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      0,
      0,
      1,
      1,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      1,
      1,
      0,
      1,
      1,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      1,
      1,
      1,
      0,
      0,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      0,
      1,
      0,
      1,
      0,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      0,
      1,
      1,
      0,
      1,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      0,
      0,
      0,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      0,
      1,
      1,
      0,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      0,
      0,
      1,
      0,
      0,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      0,
      1,
      1,
      1,
      0,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      1,
      0,
      0,
      1,
      0,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      0,
      1,
      0,
      1,
      0,
      1,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      0,
      0,
      0,
      1,
      1,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      0,
      0,
      1,
      0,
      0,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      1,
      0,
      0,
      0,
      0
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      1,
      1,
      1,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    }
   ]
  }
 ]
}
)GOLDEN"},
    {"c633.code", R"GOLDEN(# [6,3,3] code
alphabet qary 2
000000
001110
010101
011011
100011
101101
110110
111000
)GOLDEN"},
    {"c633.expected.json", R"GOLDEN({
 "q": 2,
 "n": 6,
 "d_x": 3,
 "d_z": 2,
 "alphabet": "qary 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      0,
      0,
      0,
      0,
      0,
      0
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      0,
      1,
      1,
      0,
      1,
      1
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      1,
      0,
      1,
      1,
      0,
      1
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      1,
      1,
      0,
      1,
      1,
      0
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      0,
      0,
      1,
      1,
      1,
      0
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      0,
      1,
      0,
      1,
      0,
      1
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      1,
      0,
      0,
      0,
      1,
      1
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    },
    {
     "codeword": [
      1,
      1,
      1,
      0,
      0,
      0
     ],
     "amp": 0.5,
     "amp_sq_num": 1,
     "amp_sq_den": 4
    }
   ]
  }
 ]
}
)GOLDEN"},
    {"c422.code", R"GOLDEN(# [4,2,2] code
alphabet qary 2
0000
1010
1101
0111
)GOLDEN"},
    {"cyclic482.code", R"GOLDEN(# nonlinear (4,8,2) cyclic code
alphabet qary 2
0001
0010
0100
0111
1000
1011
1101
1110
)GOLDEN"},
    {"cyclic482.expected.json", R"GOLDEN({
 "q": 2,
 "n": 4,
 "d_x": 2,
 "d_z": 2,
 "alphabet": "qary 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      0,
      0,
      0,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      1,
      1,
      1,
      0
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      0,
      0,
      1,
      0
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      1,
      1,
      0,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  },
  {
   "label": 2,
   "support": [
    {
     "codeword": [
      0,
      1,
      0,
      0
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      1,
      0,
      1,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  },
  {
   "label": 3,
   "support": [
    {
     "codeword": [
      1,
      0,
      0,
      0
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      0,
      1,
      1,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  }
 ]
}
)GOLDEN"},
    {"steane-embedded.expected.json", R"GOLDEN({
 "q": 5,
 "n": 7,
 "d_x": 3,
 "d_z": 3,
 "alphabet": "spin 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      1,
      1,
      1,
      1,
      1,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      1,
      2,
      2,
      2,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      2,
      2,
      1,
      2,
      2,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      2,
      2,
      2,
      1,
      1,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      1,
      2,
      1,
      2,
      1,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      1,
      2,
      2,
      1,
      2,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      2,
      1,
      1,
      1,
      2,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      2,
      1,
      2,
      2,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      1,
      1,
      2,
      1,
      1,
      2,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      1,
      2,
      2,
      2,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      2,
      1,
      1,
      2,
      1,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      1,
      2,
      1,
      2,
      1,
      2,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      1,
      1,
      1,
      2,
      2,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      1,
      1,
      2,
      1,
      1,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      2,
      2,
      1,
      1,
      1,
      1
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    },
    {
     "codeword": [
      2,
      2,
      2,
      2,
      2,
      2,
      2
     ],
     "amp": 0.35355339059327373,
     "amp_sq_num": 1,
     "amp_sq_den": 8
    }
   ]
  }
 ]
}
)GOLDEN"},
    {"spin8.json", R"GOLDEN({
 "q": 5,
 "n": 8,
 "d_x": 3,
 "d_z": 3,
 "alphabet": "spin 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      1,
      1,
      1,
      -2,
      -2,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      1,
      -2,
      -1,
      -1,
      1,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      -1,
      -2,
      -2,
      -1,
      -1,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      -1,
      -1,
      1,
      1,
      -2,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      2,
      -1,
      -1,
      1,
      1,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      2,
      1,
      -2,
      -2,
      -1,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      1,
      -2,
      -1,
      -1,
      1,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      1,
      1,
      1,
      -2,
      -2,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      -1,
      -1,
      1,
      1,
      -2,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      -1,
      -2,
      -2,
      -1,
      -1,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      2,
      1,
      -2,
      -2,
      -1,
      2,
      2,
      1
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    },
    {
     "codeword": [
      2,
      -1,
      -1,
      1,
      1,
      -2,
      -2,
      -2
     ],
     "amp": 0.4082482904638631,
     "amp_sq_num": 1,
     "amp_sq_den": 6
    }
   ]
  }
 ]
}
)GOLDEN"},
    {"spin6.json", R"GOLDEN({
 "q": 5,
 "n": 6,
 "d_x": 2,
 "d_z": 2,
 "alphabet": "spin 2",
 "states": [
  {
   "label": 0,
   "support": [
    {
     "codeword": [
      1,
      1,
      2,
      1,
      -2,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      -2,
      1,
      -2,
      -2,
      2,
      2
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  },
  {
   "label": 1,
   "support": [
    {
     "codeword": [
      1,
      1,
      -2,
      -2,
      2,
      1
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    },
    {
     "codeword": [
      -2,
      1,
      2,
      1,
      -2,
      2
     ],
     "amp": 0.7071067811865475,
     "amp_sq_num": 1,
     "amp_sq_den": 2
    }
   ]
  }
 ]
}
)GOLDEN"},
}};

}  // namespace qeccforge::golden_data

#endif  // QECCFORGE_GOLDEN_DATA_HPP
