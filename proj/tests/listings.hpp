#pragma once

// Published sequence prefixes, copied verbatim.

#include <string>
#include <vector>

namespace listings {

inline const std::vector<unsigned> t2{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1,
                                      1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0};
inline const std::vector<unsigned> t3{0, 1, 2, 1, 2, 0, 2, 0, 1, 1, 2, 0, 2, 0,
                                      1, 0, 1, 2, 2, 0, 1, 0, 1, 2, 1, 2, 0};
inline const std::vector<unsigned> t4{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0,
                                      1, 2, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1};
inline const std::vector<unsigned> t5{0, 1, 2, 3, 4, 1, 2, 3, 4, 0, 2, 3, 4, 0,
                                      1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3, 1, 2};

inline const std::vector<std::string> z23{"(0,0)", "(1,1)", "(1,2)", "(0,0)", "(1,1)", "(0,2)",
                                          "(0,0)", "(1,1)", "(1,2)", "(0,0)", "(0,1)", "(1,2)"};
inline const std::vector<std::string> z25{"(0,0)", "(1,1)", "(1,2)", "(0,3)", "(1,4)", "(0,0)",
                                          "(0,1)", "(1,2)", "(1,3)", "(0,4)", "(0,0)", "(1,1)"};
inline const std::vector<std::string> z32{"(0,0)", "(1,1)", "(2,0)", "(1,1)", "(2,0)", "(0,1)",
                                          "(2,0)", "(0,1)", "(1,0)", "(1,1)", "(2,0)", "(0,1)"};

}  // namespace listings
