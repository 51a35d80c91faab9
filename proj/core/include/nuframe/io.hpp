#pragma once

// Text formats for step-function dumps and mask files.
//
// Step function CSV:
//   # resolution=4 p=2 c=1 modulus=
//   rep_digits,re,im
//   -2:1 0 1,0.5,0
// rep_digits is "<lowest exponent>:<GF indices from that exponent up>"; the
// zero representative is written "0:".
//
// Mask file:
//   # p=2 c=1 N=1 r=1 nu=1 normalization=unitary
//   mask 0
//   0 0 0.70710678118654757 0
//   1 0 0.70710678118654757 0
//   mask 1
//   ...
// Rows are "n delta re im". Blank lines and lines starting with '#' after the
// header are ignored.

#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "nuframe/stepfn.hpp"
#include "nuframe/system.hpp"

namespace nuframe {

std::string format_digits(const FieldElement& x);
/// Throws DataError(line) on malformed text.
FieldElement parse_digits(const std::string& text, const LocalField& field, std::size_t line);

void write_step_csv(std::ostream& out, const StepFunction& f);
/// Reads a dump; the header must describe the same field. Throws DataError.
StepFunction read_step_csv(std::istream& in, std::shared_ptr<const LocalField> field);
/// Field recorded in a dump header. Throws DataError.
FieldConfig read_step_csv_field(std::istream& in);

struct MaskFile {
  int p = 0;
  int c = 1;
  int N = 1;
  int r = 1;
  std::uint32_t nu = 1;
  Normalization normalization = Normalization::unitary;
  std::vector<std::map<LambdaIndex, Complex>> masks;
};

void write_mask_file(std::ostream& out, const SystemConfig& sys);
/// Throws DataError on malformed rows or a missing header.
MaskFile read_mask_file(std::istream& in);

}  // namespace nuframe
