#include "mtc/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace mtc {

namespace {

std::string hexfloat(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

double parse_double(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    const double x = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return x;
  } catch (const std::exception&) {
    throw SnapshotError(std::string("snapshot: bad ") + what + " value '" +
                        tok + "'");
  }
}

std::string next_line(std::istringstream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw SnapshotError(std::string("snapshot: truncated before ") + what);
  return line;
}

// Splits "key v1 v2 ..." and checks the key.
std::vector<std::string> fields(const std::string& line, const char* key,
                                size_t nvals) {
  std::istringstream ls(line);
  std::vector<std::string> toks;
  std::string t;
  while (ls >> t) toks.push_back(t);
  if (toks.empty() || toks[0] != key || toks.size() != nvals + 1)
    throw SnapshotError(std::string("snapshot: expected '") + key +
                        "' line, got '" + line + "'");
  return toks;
}

}  // namespace

std::string snapshot_to_string(const Snapshot& s) {
  if (s.p < 1) throw SnapshotError("snapshot: p must be >= 1");
  if (s.state.coeffs.size() != 2 * s.p)
    throw SnapshotError("snapshot: coefficient count must equal 2p");
  std::ostringstream out;
  out << "mtc-snapshot 1\n";
  out << "p " << s.p << "\n";
  out << "ell " << hexfloat(s.ell) << "\n";
  out << "t " << hexfloat(s.t) << "\n";
  out << "params " << hexfloat(s.params.alpha) << " " << hexfloat(s.params.beta)
      << " " << hexfloat(s.params.gamma) << " " << hexfloat(s.params.delta)
      << "\n";
  out << "coeffs " << s.state.coeffs.size() << "\n";
  for (int k = 0; k < s.state.coeffs.size(); ++k)
    out << hexfloat(s.state.coeffs[k]) << "\n";
  out << "end\n";
  return out.str();
}

Snapshot snapshot_from_string(const std::string& text) {
  std::istringstream in(text);

  auto head = fields(next_line(in, "header"), "mtc-snapshot", 1);
  if (head[1] != "1")
    throw SnapshotError("snapshot: unsupported version '" + head[1] + "'");

  Snapshot s;
  auto pline = fields(next_line(in, "p"), "p", 1);
  try {
    s.p = std::stoi(pline[1]);
  } catch (const std::exception&) {
    throw SnapshotError("snapshot: bad p value '" + pline[1] + "'");
  }
  if (s.p < 1) throw SnapshotError("snapshot: p must be >= 1");

  s.ell = parse_double(fields(next_line(in, "ell"), "ell", 1)[1], "ell");
  if (!(s.ell > 0.0)) throw SnapshotError("snapshot: ell must be > 0");
  s.t = parse_double(fields(next_line(in, "t"), "t", 1)[1], "t");

  auto pv = fields(next_line(in, "params"), "params", 4);
  s.params.alpha = parse_double(pv[1], "alpha");
  s.params.beta = parse_double(pv[2], "beta");
  s.params.gamma = parse_double(pv[3], "gamma");
  s.params.delta = parse_double(pv[4], "delta");

  auto cv = fields(next_line(in, "coeffs"), "coeffs", 1);
  long count = 0;
  try {
    count = std::stol(cv[1]);
  } catch (const std::exception&) {
    throw SnapshotError("snapshot: bad coefficient count '" + cv[1] + "'");
  }
  if (count != 2L * s.p)
    throw SnapshotError("snapshot: coefficient count must equal 2p");

  s.state.ell = s.ell;
  s.state.coeffs.resize(count);
  for (long k = 0; k < count; ++k) {
    std::string line = next_line(in, "coefficient");
    std::istringstream ls(line);
    std::string tok, extra;
    if (!(ls >> tok) || (ls >> extra))
      throw SnapshotError("snapshot: bad coefficient line '" + line + "'");
    s.state.coeffs[k] = parse_double(tok, "coefficient");
  }

  std::string tail = next_line(in, "end");
  if (tail != "end") throw SnapshotError("snapshot: missing 'end' marker");
  return s;
}

void write_snapshot(const std::string& path, const Snapshot& s) {
  const std::string text = snapshot_to_string(s);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SnapshotError("snapshot: cannot open '" + tmp + "'");
    out << text;
    if (!out) throw SnapshotError("snapshot: write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw SnapshotError("snapshot: rename to '" + path + "' failed");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("snapshot: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return snapshot_from_string(buf.str());
}

}  // namespace mtc
