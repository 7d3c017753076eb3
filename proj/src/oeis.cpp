#include "tncalc/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tncalc/sequences.hpp"

namespace tncalc {

SequenceId sequence_id_from_string(std::string_view name) {
  if (name == "A000166") return SequenceId::A000166;
  if (name == "A001865") return SequenceId::A001865;
  if (name == "A001863") return SequenceId::A001863;
  if (name == "A129137") return SequenceId::A129137;
  throw std::invalid_argument("unknown sequence id: '" + std::string(name) + "'");
}

std::string to_string(SequenceId id) {
  switch (id) {
    case SequenceId::A000166: return "A000166";
    case SequenceId::A001865: return "A001865";
    case SequenceId::A001863: return "A001863";
    case SequenceId::A129137: return "A129137";
  }
  throw std::logic_error("bad SequenceId");
}

SequenceTable generate(SequenceId id, std::size_t count) {
  if (count == 0) throw std::domain_error("generate: count must be positive");
  SequenceTable table;
  table.id = to_string(id);
  table.offset = 0;
  table.terms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational z;
    switch (id) {
      case SequenceId::A000166: z = Rational(-static_cast<long>(k) - 1); break;
      case SequenceId::A001865: z = 1; break;
      case SequenceId::A001863: z = 2; break;
      case SequenceId::A129137: z = 3; break;
    }
    table.terms.push_back(to_integer(tn_power_sum(static_cast<unsigned>(k), z)));
  }
  return table;
}

std::string emit_bfile(const SequenceTable& table) {
  std::string out;
  if (!table.id.empty()) {
    out += "# ";
    out += table.id;
    out += '\n';
  }
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    out += std::to_string(table.offset + static_cast<long>(i));
    out += ' ';
    out += to_string(table.terms[i]);
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

SequenceTable parse_bfile(std::string_view text) {
  SequenceTable table;
  bool have_offset = false;
  long next_index = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      // The first single-token comment before any data is the table id.
      std::string_view body = trim(line.substr(1));
      if (table.id.empty() && table.terms.empty() && !body.empty() &&
          body.find_first_of(" \t") == std::string_view::npos)
        table.id = std::string(body);
      continue;
    }

    std::istringstream fields{std::string(line)};
    std::string index_tok, value_tok, extra;
    fields >> index_tok >> value_tok;
    if (!fields || (fields >> extra && !extra.empty()))
      throw bfile_error("line " + std::to_string(line_no) + ": expected two tokens");
    if (!is_integer_token(index_tok) || !is_integer_token(value_tok))
      throw bfile_error("line " + std::to_string(line_no) + ": not an integer pair");

    long index = 0;
    try {
      index = std::stol(index_tok);
    } catch (const std::exception&) {
      throw bfile_error("line " + std::to_string(line_no) + ": index out of range");
    }
    if (!have_offset) {
      table.offset = index;
      next_index = index;
      have_offset = true;
    }
    if (index != next_index)
      throw bfile_error("line " + std::to_string(line_no) + ": non-consecutive index " +
                        std::to_string(index) + " (expected " + std::to_string(next_index) + ")");
    ++next_index;
    table.terms.emplace_back(value_tok, 10);
  }

  if (table.terms.empty()) throw bfile_error("no terms");
  return table;
}

CompareReport compare(const SequenceTable& generated, const SequenceTable& reference) {
  if (generated.terms.empty() || reference.terms.empty())
    throw std::invalid_argument("compare: empty table");

  long gen_end = generated.offset + static_cast<long>(generated.terms.size());
  long ref_end = reference.offset + static_cast<long>(reference.terms.size());
  if (gen_end <= reference.offset || ref_end <= generated.offset)
    throw std::invalid_argument("compare: disjoint ranges");

  // Differing offsets on intersecting ranges mean the reference uses another
  // indexing convention for the same terms: align both lists from their
  // starts and report the shift. Equal offsets compare index-aligned.
  CompareReport report;
  report.alignment_shift = reference.offset - generated.offset;
  std::size_t overlap = std::min(generated.terms.size(), reference.terms.size());

  for (std::size_t i = 0; i < overlap; ++i) {
    const Integer& g = generated.terms[i];
    const Integer& r = reference.terms[i];
    if (g != r)
      report.mismatches.push_back({generated.offset + static_cast<long>(i), g, r});
  }
  return report;
}

}  // namespace tncalc
