#pragma once

#include "musat/formula.hpp"

#include <iosfwd>
#include <string>

namespace musat {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line), column(column)
    {
    }
    int line;
    int column;
};

/**
 * A formula with explicit variable rows and clause column order, the shape
 * used by the appendix tables. CnfFormula is a set; this keeps layout so that
 * fixture files round-trip byte for byte.
 */
struct MatrixForm {
    int num_vars = 0;
    std::vector<Clause> columns; // clause per column, in file order

    CnfFormula to_formula() const { return CnfFormula(columns); }
    static MatrixForm from_formula(const CnfFormula& f); // rows 1..max_var, canonical columns
};

// Matrix text format: one row per variable, cells '+', '-' or '.' separated
// by single spaces; lines starting with '#' are comments.
MatrixForm read_matrix(std::istream& in);
MatrixForm read_matrix_file(const std::string& path);
std::string write_matrix(const MatrixForm& m);

// Standard DIMACS CNF.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
std::string write_dimacs(const CnfFormula& f);

} // namespace musat
