#pragma once

#include "edvlab/canon.hpp"
#include "edvlab/edv.hpp"
#include "edvlab/indices.hpp"
#include "edvlab/tree.hpp"

#include <string>
#include <vector>

namespace edvlab {

struct EdvClass {
  EdgeDivisionVector vector;
  std::vector<CanonicalCode> members;

  int size() const { return static_cast<int>(members.size()); }
};

/// All trees of order n grouped by edge division vector. Classes come in
/// increasing vector order, members in increasing code order; the result does
/// not depend on `jobs`.
std::vector<EdvClass> classify(int n, int jobs = 1);

struct Census {
  int n = 0;
  int total_trees = 0;
  int dedv_count = 0;
  int equivalent_tree_count = 0;
  int class_count_nontrivial = 0;
  Rational dedv_fraction;
  Rational equivalent_fraction;
};

Census census(int n, int jobs = 1);
Census census(int n, const std::vector<EdvClass>& classes);

/// Four decimals, rounded half up; 0 and 1 print bare.
std::string render_fraction(const Rational& q, int digits = 4);

/// Whether t is the only tree of its order with its vector.
bool is_dedv(const Tree& t);

struct ClosureRow {
  CanonicalCode code;
  EdgeDivisionVector vector;
  int class_size = 0;
  int closure_size = 0;
  bool closure_equals_class = false;
};

struct ClosureReport {
  int n = 0;
  std::vector<ClosureRow> rows;

  /// Trees whose branch-exchange closure differs from their class.
  std::vector<ClosureRow> mismatches() const;
};

ClosureReport problem1_report(int n);

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(std::string_view name);

std::string render_classification(int n, const std::vector<EdvClass>& classes,
                                  OutputFormat format);
std::string render_census(const std::vector<Census>& rows, OutputFormat format);
std::string render_closure_report(const ClosureReport& report);

} // namespace edvlab
