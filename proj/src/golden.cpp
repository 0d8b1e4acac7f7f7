#include "uqf4/golden.hpp"

namespace uqf4 {

const std::vector<GoldenIdentity>& golden_identities() {
    static const std::vector<GoldenIdentity> v = {
        {"rank3", 1, {"[E{1},E{12}]", "[E{12},E{2}]", "[E{2},E{23}]", "[E{233},E{3}]", "[E{3},E{34}]", "[E{34},E{4}]", "0"}},
        {"rank3", 2, {"[E{1233},E{23}]", "[E{123},E{2}]", "[E{1},E{123}]", "[E{1},E{1233}]", "0"}},
        {"rank3", 3, {"[E{123},E{23}]", "E{2}E{1233} - s^2E{1233}E{2}"}},
        {"rank3", 4, {"[E{12},E{123}]", "[E{23},E{233}]", "[E{123},E{1233}]", "[E{1233},E{12332}]", "0"}},
        {"rank3", 5, {"[E{2},E{233}]", "r(r-s)E{23}^2"}},
        {"rank3", 6, {"[E{12},E{23}]", "(r^2-s^2)E{123}E{2}"}},
        {"rank3", 7, {"[E{12},E{233}]", "r^2s^2E{12332} + r(r-s)(E{123}E{23} + s^2E{23}E{123})"}},

        {"extension", 1, {"[E{1234},E{4}]", "[E{1234},E{2}]", "[E{1},E{1234}]", "[E{12},E{1234}]", "[E{1},E{12343}]", "0"}},
        {"extension", 2, {"[E{23},E{34}]", "rE{234}E{3} - s^2E{3}E{234}"}},
        {"extension", 3, {"[E{233},E{4}]", "(r+s)E{2343}"}},
        {"extension", 4, {"[E{1233},E{4}]", "(r+s)E{12343}"}},
        {"extension", 5, {"[E{1234},E{233}]", "[E{1233},E{234}]", "(r+s)E{23}E{12343} - s(r+s)E{12343}E{23}"}},
        {"extension", 6, {"[E{2},E{2343}]", "r^2E{234}E{23} - sE{23}E{234}", "r(r-s)E{234}E{23}"}},
        {"extension", 7, {"[E{234},E{4}]", "[E{2},E{234}]", "[E{23},E{234}]", "0"}},
        {"extension", 8, {"[E{12332},E{3}]", "0"}},
        {"extension", 9, {"[E{123},E{34}]", "rE{1234}E{3} - s^2E{3}E{1234}"}},
        {"extension", 10, {"[E{1234},E{23}]", "E{2}E{12343} - s^2E{12343}E{2}"}},
        {"extension", 11, {"[E{12332},E{4}]", "(r+s)E{123432}"}},
        {"extension", 12, {"[E{12332},E{34}]", "r^2s^2(r+s)[E{3},E{123432}]"}},
        {"extension", 13, {"[E{123},E{2343}]", "r^2sE{12343}E{23} - s^2E{23}E{12343} + (r-s)(E{1233}E{234} + s^2E{233}E{1234})"}},
        {"extension", 14, {"[E{1234},E{234}]", "[E{2},E{123434}]"}},
        {"extension", 15, {"[E{1234},E{2343}]", "rE{12343}E{234} - s^2E{234}E{12343}"}},

        {"tail", 1, {"[E{233},E{234}]", "0"}},
        {"tail", 2, {"[E{23},E{2343}]", "(r-s)E{233}E{234}"}},
        {"tail", 3, {"[E{234},E{2343}]", "0"}},
        {"tail", 4, {"[E{2343},E{3}]", "0"}},
        {"tail", 5, {"[E{23434},E{3}]", "0"}},
        {"tail", 6, {"[E{23434},E{4}]", "0"}},
        {"tail", 7, {"[E{234},E{23434}]", "0"}},
        {"tail", 8, {"[E{2343},E{23434}]", "0"}},
        {"tail", 9, {"[E{233},E{2343}]", "0"}},
        {"tail", 10, {"[E{233},E{23434}]", "r(r^2-s^2)E{2343}^2"}},
        {"tail", 11, {"[E{1233},E{23434}]", "r(r^2-s^2)(E{12343}E{2343} + s^2E{2343}E{12343}) + r^2s^2E{123434233}"}},

        {"middle", 1, {"[E{123},E{234}]", "rE{1234}E{23} - s^2E{23}E{1234}"}},
        {"middle", 2, {"[E{123},E{1234}]", "0"}},
        {"middle", 3, {"[E{1233},E{1234}]", "0"}},
        {"middle", 4, {"[E{12332},E{1234}]", "0"}},
        {"middle", 5, {"[E{1234},E{12343}]", "0"}},
        {"middle", 6, {"[E{12343},E{233}]", "0"}},
        {"middle", 7, {"[E{1234},E{123432}]", "0"}},
        {"middle", 8, {"[E{1234},E{1234323}]", "rE{123432}E{12343} - rs^2E{12343}E{123432}"}},
        {"middle", 9, {"[E{12343123432},E{3}]", "[E{12343},E{1234323}]", "0"}},
        {"middle", 10, {"[E{1234},E{12343123432}]", "0"}},
        {"middle", 11, {"[E{12343},E{12343123432}]", "0"}},
        {"middle", 12, {"[E{12332},E{12343}]", "0"}},
        {"middle", 13, {"[E{1233},E{12343}]", "0"}},
        {"middle", 14, {"[E{1234323},E{3}]", "0"}},
        {"middle", 15, {"[E{12},E{2343}]", "rs^2(r-s)E{234}E{123} + r(r-s)E{1234}E{23} + r^2s^2E{123432}"}},
        {"middle", 16, {"[E{12343},E{2343}]", "(r+s)^-1(E{233}E{123434} - s^2E{123434}E{233})"}},
        {"middle", 17, {"[E{1233},E{123434}]", "r(r^2-s^2)E{12343}^2"}},
        {"middle", 18, {"[E{1233},E{1234342}]",
                        "r(r^2-s^2)(r^-2E{123432}E{12343} + E{12343}E{123432}) + r^2s^2E{123434}E{12332} - r^-2E{12332}E{123434}"}},
        {"middle", 19, {"[E{12332},E{123434}]", "-rs(r+s)[E{123432},E{12343}]"}},

        {"upper", 1, {"[E{123432},E{2}]", "0"}},
        {"upper", 2, {"[E{12343123432},E{2}]", "r^-1s^-2(r-s)E{123432}^2"}},
        {"upper", 3, {"[E{12343123432},E{123432}]", "0"}},
        {"upper", 4, {"[E{1234323},E{2}]", "0"}},
        {"upper", 5, {"[E{123432},E{1234323}]", "0"}},
        {"upper", 6, {"[E{12343},E{234}]", "(r+s)^-1(E{23}E{123434} - s^2E{123434}E{23})"}},
        {"upper", 7, {"[E{1234323},E{4}]", "rs(r+s)^-1E{12343423}"}},
        {"upper", 8, {"[E{123432},E{34}]", "s^2(r+s)^-1(r^2E{3}E{1234342} - E{1234342}E{3})"}},
        {"upper", 9, {"[E{1234},E{123434}]", "0"}},
        {"upper", 10, {"[E{123432},E{123434}]", "0"}},
        {"upper", 11, {"[E{1234323},E{123434}]", "0"}},
        {"upper", 12, {"[E{12343},E{123434}]", "0"}},
        {"upper", 13, {"[E{1234342},E{4}]", "0"}},
        {"upper", 14, {"[E{12343},E{1234342}]", "(s^-2 - r^-2)E{123432}E{123434}"}},
        {"upper", 15, {"[E{123434},E{1234342}]", "0"}},
        {"upper", 16, {"[E{1234323},E{34}]", "r^2sE{3}E{12343423} - sE{12343423}E{3}"},
         {"[E{1234323},E{34}]", "rs(r+s)^-1(r^2sE{3}E{12343423} - sE{12343423}E{3})"},
         "stated value lacks the factor rs/(r+s) carried by [E{1234323},E{4}]"},
        {"upper", 17, {"[E{123432},E{234}]", "(r+s)^-1(r^2E{23}E{1234342} - s^2E{1234342}E{23})"}},

        {"top", 1, {"[E{123434},E{12343423}]", "0"}},
        {"top", 2, {"[E{1234342},E{2}]", "0"}},
        {"top", 3, {"[E{1234342},E{23}]", "r^-2E{2}E{12343423} - r^2E{12343423}E{2}"},
         {"[E{1234342},E{23}]", "r^2E{12343423}E{2} - r^-2E{2}E{12343423}"},
         "stated value has the opposite sign"},
        {"top", 4, {"[E{12343423},E{2}]", "0"}},
        {"top", 5, {"[E{1234342},E{12343423}]", "0"}},
        {"top", 6, {"[E{123434233},E{3}]", "0"}},
        {"top", 7, {"[E{1234342},E{123434233}]", "r(r-s)E{12343423}^2"}},
        {"top", 8, {"[E{12343423},E{123434233}]", "0"}},
        {"top", 9, {"[E{12343423},E{23}]", "r^-2s^-2E{2}E{123434233} - s^2E{123434233}E{2}"}},
        {"top", 10, {"[E{12343423},E{233}]", "r^-1s^-2(r+s)(E{23}E{123434233} - rs^3E{123434233}E{23})"}},
        {"top", 11, {"[E{123434233},E{23}]", "0"}},
        {"top", 12, {"[E{1234342332},E{3}]", "0"}},
        {"top", 13, {"[E{12343423},E{1234342332}]", "0"}},
        {"top", 14, {"[E{123434233},E{1234342332}]", "0"}},
        {"top", 15, {"[E{1234342332},E{2}]", "0"}},
        {"top", 16, {"[E{1234342},E{233}]", "E{23}E{12343423} - rsE{12343423}E{23}"},
         {"[E{1234342},E{233}]", "[E{123434},[E{2},E{233}]] + r^2s^2[E{123434233},E{2}]",
          "r(r-s)(E{12343423}E{23} + r^-2E{23}E{12343423}) + r^2s^2E{1234342332}"},
         "stated value was derived from the sign-flipped [E{1234342},E{23}]"},
        {"top", 17, {"[E{1234323},E{234}]", "r(r+s)^-1(E{23}E{12343423} - s^2E{12343423}E{23})"}},
        {"top", 18, {"[E{123432},E{2343}]",
                     "r^2(r-s)E{233}E{1234342} + (r-s)E{23}E{12343423} + r^2sE{234}E{1234323} - sE{1234323}E{234}"},
         {"[E{123432},E{2343}]",
          "-rs^5(r+s)^-1E{1234342332} - r^-3(r-s)^2E{2}E{123434233} + r^-1(r-s)(r^2-rs-s^2)(r+s)^-1E{23}E{12343423}"
          " + s^2(r-s)E{233}E{1234342} + rs(r-s)E{234}E{1234323}"},
         "stated value inherits the error in [E{1234342},E{233}]"},
    };
    return v;
}

const std::vector<int>& lyndon_checked_roots() {
    static const std::vector<int> v = {3, 4, 6, 7, 11, 14, 19, 21};
    return v;
}

}  // namespace uqf4
