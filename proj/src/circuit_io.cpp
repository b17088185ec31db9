#include "gpq/circuit_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gpq {

namespace {

using nlohmann::json;

json gate_to_json(const Gate& g) {
  json jg;
  jg["regs"] = g.regs;
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < g.mat.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index c = 0; c < g.mat.cols(); ++c) {
      re_row.push_back(g.mat(r, c).real());
      im_row.push_back(g.mat(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  jg["re"] = std::move(re);
  jg["im"] = std::move(im);
  return jg;
}

Gate gate_from_json(const json& jg) {
  Gate g;
  g.regs = jg.at("regs").get<std::vector<int>>();
  const auto& re = jg.at("re");
  const auto& im = jg.at("im");
  if (!re.is_array() || re.size() != im.size() || re.empty())
    throw std::invalid_argument("gate matrix parts disagree");
  const std::size_t rows = re.size();
  const std::size_t cols = re[0].size();
  g.mat.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (re[r].size() != cols || im[r].size() != cols)
      throw std::invalid_argument("ragged gate matrix");
    for (std::size_t c = 0; c < cols; ++c)
      g.mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return g;
}

}  // namespace

std::string circuit_to_json(const QueryCircuit& c) {
  json j;
  j["dims"] = c.layout.dims;
  j["output_reg"] = c.output_reg;
  json slots = json::array();
  for (const auto& s : c.slots) slots.push_back({{"index_reg", s.index_reg}, {"bit_reg", s.bit_reg}});
  j["slots"] = std::move(slots);
  json stages = json::array();
  for (const auto& stage : c.stages) {
    json js = json::array();
    for (const auto& g : stage) js.push_back(gate_to_json(g));
    stages.push_back(std::move(js));
  }
  j["stages"] = std::move(stages);
  return j.dump(1);
}

QueryCircuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  QueryCircuit c;
  c.layout.dims = j.at("dims").get<std::vector<std::int64_t>>();
  c.output_reg = j.at("output_reg").get<int>();
  for (const auto& js : j.at("slots"))
    c.slots.push_back({js.at("index_reg").get<int>(), js.at("bit_reg").get<int>()});
  for (const auto& jstage : j.at("stages")) {
    std::vector<Gate> stage;
    for (const auto& jg : jstage) stage.push_back(gate_from_json(jg));
    c.stages.push_back(std::move(stage));
  }
  c.validate();
  return c;
}

void save_circuit(const QueryCircuit& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << circuit_to_json(c) << "\n";
}

QueryCircuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return circuit_from_json(buf.str());
}

}  // namespace gpq
