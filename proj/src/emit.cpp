#include "mahon/emit.hpp"

#include <sstream>
#include <stdexcept>

namespace mahon {

Format format_from_name(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "tsv") return Format::Tsv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

namespace {

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string vec_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::string emit_stats(Format f, const StatsPayload& p) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      os << "inv=" << p.inv << " maj=" << p.maj << " dinv=" << p.dinv
         << " minimaj=" << p.minimaj << "\n";
      break;
    case Format::Tsv:
      os << "partition\tinv\tmaj\tdinv\tminimaj\n"
         << p.partition << "\t" << p.inv << "\t" << p.maj << "\t" << p.dinv
         << "\t" << p.minimaj << "\n";
      break;
    case Format::Json:
      os << "{\"partition\":\"" << json_escape(p.partition)
         << "\",\"inv\":" << p.inv << ",\"maj\":" << p.maj
         << ",\"dinv\":" << p.dinv << ",\"minimaj\":" << p.minimaj << "}\n";
      break;
  }
  return os.str();
}

std::string emit_enumeration(Format f,
                             const std::vector<EnumeratedItem>& items) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      for (const auto& it : items) os << it.blocks << "\n";
      break;
    case Format::Tsv:
      os << "blocks\tstarred\n";
      for (const auto& it : items)
        os << it.blocks << "\t" << it.starred << "\n";
      break;
    case Format::Json: {
      os << "[";
      bool first = true;
      for (const auto& it : items) {
        if (!first) os << ",";
        first = false;
        os << "{\"blocks\":\"" << json_escape(it.blocks) << "\",\"starred\":\""
           << json_escape(it.starred) << "\"}";
      }
      os << "]\n";
      break;
    }
  }
  return os.str();
}

std::string emit_distributions(Format f, const std::vector<DistRow>& rows) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      for (const auto& r : rows)
        os << r.stat << " over osp(" << r.alpha << ", " << r.k
           << "): " << r.poly.str() << "\n";
      break;
    case Format::Tsv:
      os << "alpha\tk\tstat\tpolynomial\n";
      for (const auto& r : rows)
        os << r.alpha << "\t" << r.k << "\t" << r.stat << "\t" << r.poly.str()
           << "\n";
      break;
    case Format::Json: {
      os << "[";
      bool first = true;
      for (const auto& r : rows) {
        if (!first) os << ",";
        first = false;
        os << "{\"alpha\":\"" << r.alpha << "\",\"k\":" << r.k
           << ",\"stat\":\"" << r.stat << "\",\"polynomial\":" << r.poly.json()
           << "}";
      }
      os << "]\n";
      break;
    }
  }
  return os.str();
}

std::string emit_trace(Format f, const std::vector<PsiTraceRow>& rows,
                       const std::string& result) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
    case Format::Tsv:
      os << "n\tell\tU\tB\tpeeled\n";
      for (const auto& r : rows)
        os << r.n << "\t" << r.ell << "\t" << set_str(r.U) << "\t"
           << vec_str(r.B) << "\t" << r.peeled << "\n";
      os << result << "\n";
      break;
    case Format::Json: {
      os << "{\"steps\":[";
      bool first = true;
      for (const auto& r : rows) {
        if (!first) os << ",";
        first = false;
        os << "{\"n\":" << r.n << ",\"ell\":" << r.ell << ",\"U\":"
           << vec_str(std::vector<int>(r.U.begin(), r.U.end())) << ",\"B\":"
           << vec_str(r.B) << ",\"peeled\":\"" << json_escape(r.peeled)
           << "\"}";
      }
      os << "],\"result\":\"" << json_escape(result) << "\"}\n";
      break;
    }
  }
  return os.str();
}

std::string emit_schur(
    Format f, const std::vector<std::pair<Partition, Laurent>>& coeffs) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      for (const auto& [lam, c] : coeffs)
        os << lam.str() << ": " << c.str() << "\n";
      break;
    case Format::Tsv:
      os << "lambda\tcoeff\n";
      for (const auto& [lam, c] : coeffs)
        os << lam.str() << "\t" << c.str() << "\n";
      break;
    case Format::Json: {
      os << "[";
      bool first = true;
      for (const auto& [lam, c] : coeffs) {
        if (!first) os << ",";
        first = false;
        os << "{\"lambda\":" << vec_str(lam.parts) << ",\"coeff\":" << c.json()
           << "}";
      }
      os << "]\n";
      break;
    }
  }
  return os.str();
}

std::string emit_polynomial(Format f, const Laurent& p) {
  switch (f) {
    case Format::Text:
    case Format::Tsv:
      return p.str() + "\n";
    case Format::Json:
      return p.json() + "\n";
  }
  return "";
}

std::string emit_verify(Format f, const std::vector<VerifyRow>& rows) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      for (const auto& r : rows) {
        os << r.suite << ": " << (r.ok ? "PASS" : "FAIL") << " (" << r.checked
           << " checks)";
        if (!r.detail.empty()) os << " " << r.detail;
        os << "\n";
      }
      break;
    case Format::Tsv:
      os << "suite\tresult\tchecked\tdetail\n";
      for (const auto& r : rows)
        os << r.suite << "\t" << (r.ok ? "PASS" : "FAIL") << "\t" << r.checked
           << "\t" << r.detail << "\n";
      break;
    case Format::Json: {
      os << "[";
      bool first = true;
      for (const auto& r : rows) {
        if (!first) os << ",";
        first = false;
        os << "{\"suite\":\"" << r.suite << "\",\"ok\":"
           << (r.ok ? "true" : "false") << ",\"checked\":" << r.checked
           << ",\"detail\":\"" << json_escape(r.detail) << "\"}";
      }
      os << "]\n";
      break;
    }
  }
  return os.str();
}

}  // namespace mahon
