#pragma once

// Generated by scripts/make_kp8.py from data/kp8.json. Do not edit by hand.

namespace fqg {

inline constexpr char kKp8Json[] = R"fqgdata(
{
  "dim": 8,
  "basis": [
    "d00",
    "d10",
    "d01",
    "d11",
    "w00",
    "w10",
    "w01",
    "w11"
  ],
  "mult": [
    [
      0,
      0,
      0,
      1.0,
      0.0
    ],
    [
      0,
      4,
      4,
      1.0,
      0.0
    ],
    [
      1,
      1,
      1,
      1.0,
      0.0
    ],
    [
      1,
      5,
      5,
      1.0,
      0.0
    ],
    [
      2,
      2,
      2,
      1.0,
      0.0
    ],
    [
      2,
      6,
      6,
      1.0,
      0.0
    ],
    [
      3,
      3,
      3,
      1.0,
      0.0
    ],
    [
      3,
      7,
      7,
      1.0,
      0.0
    ],
    [
      4,
      0,
      4,
      1.0,
      0.0
    ],
    [
      4,
      4,
      0,
      1.0,
      0.0
    ],
    [
      5,
      2,
      5,
      1.0,
      0.0
    ],
    [
      5,
      6,
      1,
      1.0,
      0.0
    ],
    [
      6,
      1,
      6,
      1.0,
      0.0
    ],
    [
      6,
      5,
      2,
      1.0,
      0.0
    ],
    [
      7,
      3,
      7,
      1.0,
      0.0
    ],
    [
      7,
      7,
      3,
      1.0,
      0.0
    ]
  ],
  "star": [
    [
      0,
      0,
      1.0,
      0.0
    ],
    [
      1,
      1,
      1.0,
      0.0
    ],
    [
      2,
      2,
      1.0,
      0.0
    ],
    [
      3,
      3,
      1.0,
      0.0
    ],
    [
      4,
      4,
      1.0,
      0.0
    ],
    [
      5,
      6,
      1.0,
      0.0
    ],
    [
      6,
      5,
      1.0,
      0.0
    ],
    [
      7,
      7,
      1.0,
      0.0
    ]
  ],
  "unit": [
    [
      1.0,
      0.0
    ],
    [
      1.0,
      0.0
    ],
    [
      1.0,
      0.0
    ],
    [
      1.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ]
  ],
  "coproduct": [
    [
      0,
      0,
      0,
      1.0,
      0.0
    ],
    [
      0,
      1,
      1,
      1.0,
      0.0
    ],
    [
      0,
      2,
      2,
      1.0,
      0.0
    ],
    [
      0,
      3,
      3,
      1.0,
      0.0
    ],
    [
      1,
      0,
      1,
      1.0,
      0.0
    ],
    [
      1,
      1,
      0,
      1.0,
      0.0
    ],
    [
      1,
      2,
      3,
      1.0,
      0.0
    ],
    [
      1,
      3,
      2,
      1.0,
      0.0
    ],
    [
      2,
      0,
      2,
      1.0,
      0.0
    ],
    [
      2,
      1,
      3,
      1.0,
      0.0
    ],
    [
      2,
      2,
      0,
      1.0,
      0.0
    ],
    [
      2,
      3,
      1,
      1.0,
      0.0
    ],
    [
      3,
      0,
      3,
      1.0,
      0.0
    ],
    [
      3,
      1,
      2,
      1.0,
      0.0
    ],
    [
      3,
      2,
      1,
      1.0,
      0.0
    ],
    [
      3,
      3,
      0,
      1.0,
      0.0
    ],
    [
      4,
      4,
      4,
      1.0,
      0.0
    ],
    [
      4,
      5,
      5,
      1.0,
      0.0
    ],
    [
      4,
      6,
      6,
      1.0,
      0.0
    ],
    [
      4,
      7,
      7,
      1.0,
      -0.0
    ],
    [
      5,
      4,
      5,
      1.0,
      0.0
    ],
    [
      5,
      5,
      4,
      1.0,
      0.0
    ],
    [
      5,
      6,
      7,
      0.0,
      1.0
    ],
    [
      5,
      7,
      6,
      -0.0,
      -1.0
    ],
    [
      6,
      4,
      6,
      1.0,
      0.0
    ],
    [
      6,
      5,
      7,
      -0.0,
      -1.0
    ],
    [
      6,
      6,
      4,
      1.0,
      0.0
    ],
    [
      6,
      7,
      5,
      0.0,
      1.0
    ],
    [
      7,
      4,
      7,
      1.0,
      0.0
    ],
    [
      7,
      5,
      6,
      0.0,
      1.0
    ],
    [
      7,
      6,
      5,
      0.0,
      -1.0
    ],
    [
      7,
      7,
      4,
      1.0,
      0.0
    ]
  ],
  "counit": [
    [
      1.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      1.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ],
    [
      0.0,
      0.0
    ]
  ],
  "metadata": {
    "name": "kp8",
    "provenance": "Kac-Paljutkin 8-dimensional quantum group (C^4 + M2(C)); crossed product C(Z2xZ2) x| Z2 (swap action) with the coproduct of the implementing unitary twisted by a non-symmetric 2-cocycle; the unique 8-dimensional Kac algebra that is neither commutative nor cocommutative; re-validated against the full axiom suite at load time"
  }
}
)fqgdata";

}  // namespace fqg
