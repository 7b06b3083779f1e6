#include "severi/reference_forms.hpp"

namespace severi::reference {

namespace {

constexpr std::array<PrintedClass, 16> kClasses = {{
    {"TN", "0", "1"},
    {"TR", "0", "0"},
    {"CP", "3d-3", "-5/2"},
    {"NL", "1", "0"},
    {"DELTA01", "0", "0"},
    {"CU", "d^3+2d^2-d-6", "-(5/6d^2+5/2d+2)"},
    {"TL", "2(3d^2-6d+2)", "-5(d-1)"},
    {"FP", "15/2d^3-30d^2+39/2d+6", "-25/4d(d-3)"},
    {"FL", "6(3d^2-6d+2)", "-15(d-1)"},
    {"FN", "5/2d^3+5d^2-5/2d-18", "-(25/12d^2+25/4d+2)"},
    {"NP", "1/2(d^3+2d^2-d-4)", "-5/12d(d+3)"},
    {"HF", "4(11d^3-68d^2+79d-9)", "-2/3(55d^2-285d+132)"},
    {"BR_N", "d^3+2d^2-d-6", "-5/6d(d+3)"},
    {"BR_T", "13d^3-64d^2+53d+12", "-1/6(65d^2-255d+36)"},
    {"BR_F", "6(13d^3-79d^2+83d+2)", "-(65d^2-330d+111)"},
    {"K_W", "-3", "0"},
}};

constexpr std::array<PrintedTableRow, 15> kTable = {{
    {"TN", "0", "(r-1)(r-2)-2+2n"},
    {"TR", "0", "0"},
    {"CP", "3d-3", "(3d-3)r-5/2((r-1)(r-2)-2+2n)"},
    {"NL", "1", "r"},
    {"DELTA01", "0", "0"},
    {"CU", "d^3+2d^2-d-6", "(d^3+2d^2-d-6)r-(5/6d^2+5/2d+2)((r-1)(r-2)-2+2n)"},
    {"TL", "2(3d^2-6d+2)", "2(3d^2-6d+2)r-5(d-1)((r-1)(r-2)-2+2n)"},
    {"FP", "3/2(5d^3-20d^2+13d+4)",
     "(15/2d^3-30d^2+39/2d+6)r-25/4d(d-3)((r-1)(r-2)-2+2n)"},
    {"FL", "6(3d^2-6d+2)", "6(3d^2-6d+2)r-15(d-1)((r-1)(r-2)-2+2n)"},
    {"FN", "1/2(5d^3+10d^2-5d-36)",
     "(5/2d^3+5d^2-5/2d-18)r-(25/12d^2+25/4d+2)((r-1)(r-2)-2+2n)"},
    {"NP", "1/2(d^3+2d^2-d-4)", "1/2(d^3+2d^2-d-4)r-5/12d(d+3)((r-1)(r-2)-2+2n)"},
    {"HF", "4(11d^3-68d^2+79d-9)",
     "4(11d^3-68d^2+79d-9)r-2/3(55d^2-285d+132)((r-1)(r-2)-2+2n)"},
    {"BR_N", "(d^3+2d^2-d-6)", "(d^3+2d^2-d-6)r-5/6d(d+3)((r-1)(r-2)-2+2n)"},
    {"BR_T", "(13d^3-64d^2+53d+12)",
     "(13d^3-64d^2+53d+12)r-1/6(65d^2-255d+36)((r-1)(r-2)-2+2n)"},
    {"BR_F", "6(13d^3-79d^2+83d+2)",
     "6(13d^3-79d^2+83d+2)r-(65d^2-330d+111)((r-1)(r-2)-2+2n)"},
}};

constexpr std::array<std::array<std::string_view, 5>, 5> kBasisMatrix = {{
    {"0", "0", "2", "4", "0"},
    {"0", "0", "9", "15", "0"},
    {"1", "2d-3", "1/6(13d-9)(d-6)", "1/6(11d^2-57d+18)", "0"},
    {"0", "-2", "-5d+18", "-7d+18", "0"},
    {"0", "0", "0", "0", "1"},
}};

}  // namespace

std::span<const PrintedClass> classes() { return kClasses; }
std::span<const PrintedTableRow> table() { return kTable; }
const std::array<std::array<std::string_view, 5>, 5>& basis_matrix() { return kBasisMatrix; }

}  // namespace severi::reference
