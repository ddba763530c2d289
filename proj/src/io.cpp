#include "eur/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eur/errors.hpp"

namespace eur {

namespace {

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(path + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw FormatError(path + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError(path + ": expected an integer");
  return j.get<int>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path + ": expected an array");
  return j;
}

std::vector<double> number_list(const json& j, const std::string& path) {
  array(j, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Eigen::MatrixXd real_table(const json& j, const std::string& path) {
  array(j, path);
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw FormatError(path + ": empty table");
  Eigen::MatrixXd m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const auto row = number_list(j[r], rp);
    if (r == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
    if (static_cast<Eigen::Index>(row.size()) != m.cols()) throw FormatError(rp + ": ragged row");
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = row[c];
  }
  return m;
}

json real_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(round12(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FamilyKind parse_kind(const std::string& s, int& subset, const std::string& path) {
  if (s == "MUB-complete") return FamilyKind::MubComplete;
  if (s == "SIC") return FamilyKind::Sic;
  if (s == "CliffordOrbit") return FamilyKind::CliffordOrbit;
  if (s == "Custom") return FamilyKind::Custom;
  if (s.rfind("MUB-subset(", 0) == 0 && s.back() == ')') {
    subset = std::atoi(s.substr(11, s.size() - 12).c_str());
    return FamilyKind::MubSubset;
  }
  throw FormatError(path + ": unknown family kind '" + s + "'");
}

}  // namespace

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

json family_to_json(const MeasurementFamily& f) {
  json settings = json::array();
  json weights = json::array();
  for (const auto& s : f.settings) {
    weights.push_back(s.weight);
    json effects = json::array();
    for (const auto& e : s.effects) {
      json re = json::array(), im = json::array();
      for (Eigen::Index i = 0; i < e.vector.size(); ++i) {
        re.push_back(e.vector(i).real());
        im.push_back(e.vector(i).imag());
      }
      effects.push_back({{"weight", e.weight}, {"re", re}, {"im", im}});
    }
    settings.push_back(std::move(effects));
  }
  return {{"d", f.d},
          {"kind", to_string(f.kind, f.subset_size)},
          {"equality_constant", f.equality_constant},
          {"setting_weights", weights},
          {"settings", settings}};
}

MeasurementFamily family_from_json(const json& j) {
  MeasurementFamily f;
  f.d = integer(field(j, "d", "family"), "family.d");
  const auto& kind = field(j, "kind", "family");
  if (!kind.is_string()) throw FormatError("family.kind: expected a string");
  f.kind = parse_kind(kind.get<std::string>(), f.subset_size, "family.kind");
  f.equality_constant = number(field(j, "equality_constant", "family"), "family.equality_constant");
  const auto& settings = array(field(j, "settings", "family"), "family.settings");
  std::vector<double> weights;
  if (j.contains("setting_weights")) {
    weights = number_list(j.at("setting_weights"), "family.setting_weights");
    if (weights.size() != settings.size()) {
      throw FormatError("family.setting_weights: length differs from settings");
    }
  } else {
    weights.assign(settings.size(), settings.empty() ? 0.0 : 1.0 / settings.size());
  }
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const std::string sp = "family.settings[" + std::to_string(s) + "]";
    Setting setting{weights[s], {}};
    const auto& effects = array(settings[s], sp);
    for (std::size_t k = 0; k < effects.size(); ++k) {
      const std::string ep = sp + "[" + std::to_string(k) + "]";
      const auto re = number_list(field(effects[k], "re", ep), ep + ".re");
      const auto im = number_list(field(effects[k], "im", ep), ep + ".im");
      if (re.size() != im.size()) throw FormatError(ep + ": re/im length mismatch");
      StateVector v(static_cast<Eigen::Index>(re.size()));
      for (std::size_t i = 0; i < re.size(); ++i) v(i) = Complex(re[i], im[i]);
      setting.effects.push_back({number(field(effects[k], "weight", ep), ep + ".weight"), v});
    }
    f.settings.push_back(std::move(setting));
  }
  validate_family(f);
  return f;
}

json density_to_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()},
          {"re", real_rows(rho.matrix().real())},
          {"im", real_rows(rho.matrix().imag())}};
}

DensityMatrix density_from_json(const json& j) {
  const auto& dims_j = array(field(j, "dims", "state"), "state.dims");
  std::vector<int> dims;
  for (std::size_t i = 0; i < dims_j.size(); ++i) {
    dims.push_back(integer(dims_j[i], "state.dims[" + std::to_string(i) + "]"));
  }
  const Eigen::MatrixXd re = real_table(field(j, "re", "state"), "state.re");
  const Eigen::MatrixXd im = real_table(field(j, "im", "state"), "state.im");
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw FormatError("state: re and im shapes differ");
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  try {
    return DensityMatrix(std::move(m), std::move(dims));
  } catch (const Error& e) {
    throw FormatError(std::string("state: ") + e.what());
  }
}

json joint_to_json(const JointDistribution& joint) {
  json settings = json::array();
  for (const auto& s : joint.settings) {
    settings.push_back({{"theta", s.theta}, {"table", real_rows(s.table)}});
  }
  return {{"d_a", joint.d_a}, {"d_b", joint.d_b}, {"settings", settings}};
}

JointDistribution joint_from_json(const json& j) {
  JointDistribution joint;
  joint.d_a = integer(field(j, "d_a", "joint"), "d_a");
  joint.d_b = integer(field(j, "d_b", "joint"), "d_b");
  const auto& settings = array(field(j, "settings", "joint"), "settings");
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const std::string sp = "settings[" + std::to_string(s) + "]";
    JointTable t;
    t.theta = integer(field(settings[s], "theta", sp), sp + ".theta");
    t.table = real_table(field(settings[s], "table", sp), sp + ".table");
    joint.settings.push_back(std::move(t));
  }
  validate_joint(joint);
  return joint;
}

json report_to_json(const RelationReport& r) {
  return {{"relation", r.relation},
          {"sense", to_string(r.sense)},
          {"lhs", round12(r.lhs)},
          {"rhs", round12(r.rhs)},
          {"defect", round12(r.defect)},
          {"tolerance", round12(r.tolerance)},
          {"verdict", to_string(r.verdict)},
          {"metadata",
           {{"family_kind", r.family_kind},
            {"d", r.d},
            {"nu", round12(r.nu)},
            {"n", r.n},
            {"rank_sensitive", r.rank_sensitive}}}};
}

json game_to_json(const GameResult& g) {
  json per = json::array();
  for (const auto& s : g.per_setting) {
    per.push_back({{"trials", s.trials},
                   {"wins", s.wins},
                   {"empirical_rate", round12(s.empirical_rate)},
                   {"analytic_rate", round12(s.analytic_rate)}});
  }
  return {{"trials", g.trials},
          {"wins", g.wins},
          {"empirical_rate", round12(g.empirical_rate)},
          {"analytic_rate", round12(g.analytic_rate)},
          {"std_error", round12(g.std_error)},
          {"within_4_sigma", g.within(4.0)},
          {"per_setting", per}};
}

std::string reports_csv_header() {
  return "relation,sense,lhs,rhs,defect,tolerance,verdict,family_kind,d,nu,n,rank_sensitive";
}

std::string report_csv_row(const RelationReport& r) {
  std::ostringstream os;
  os << r.relation << ',' << to_string(r.sense) << ',' << format12(r.lhs) << ','
     << format12(r.rhs) << ',' << format12(r.defect) << ',' << format12(r.tolerance) << ','
     << to_string(r.verdict) << ',' << r.family_kind << ',' << r.d << ',' << format12(r.nu)
     << ',' << r.n << ',' << (r.rank_sensitive ? "true" : "false");
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace eur
