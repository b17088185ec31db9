#pragma once

#include "gpq/qsim.hpp"

#include <string>

namespace gpq {

/** Circuit description format (JSON):
 *  {
 *    "dims":       [per-register dimensions, register 0 most significant],
 *    "output_reg": index of the dim-2 register measured at the end,
 *    "slots":      [{"index_reg": r, "bit_reg": b}, ...],
 *    "stages":     one gate list per stage (slots+1 of them, may be empty);
 *                  a gate is {"regs": [...], "re": [[...]], "im": [[...]]}
 *  }
 * Matrices are dense row-major over the product of the gate's register dims.
 */
std::string circuit_to_json(const QueryCircuit& c);
QueryCircuit circuit_from_json(const std::string& text);

void save_circuit(const QueryCircuit& c, const std::string& path);
QueryCircuit load_circuit(const std::string& path);

}  // namespace gpq
