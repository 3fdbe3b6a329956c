#include "qpa/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qpa/errors.hpp"

namespace qpa {

Word::Word(int alphabet, std::vector<int> letters)
    : alphabet(alphabet), letters(std::move(letters)) {
  if (alphabet < 1) throw std::invalid_argument("word: alphabet must be >= 1");
  for (int x : this->letters) {
    if (x < 1 || x > alphabet) {
      throw std::invalid_argument("word: letter " + std::to_string(x) +
                                  " outside alphabet [1," + std::to_string(alphabet) + "]");
    }
  }
}

std::vector<int64_t> Word::histogram() const {
  std::vector<int64_t> h(alphabet, 0);
  for (int x : letters) ++h[x - 1];
  return h;
}

SemistandardTableau::SemistandardTableau(int alphabet)
    : d_(alphabet), counts_(static_cast<std::size_t>(alphabet) * alphabet, 0) {
  if (alphabet < 1) throw std::invalid_argument("tableau: alphabet must be >= 1");
}

SemistandardTableau SemistandardTableau::from_rows(
    int alphabet, const std::vector<std::vector<int>>& rows) {
  SemistandardTableau t(alphabet);
  if (rows.size() > static_cast<std::size_t>(alphabet)) {
    throw std::invalid_argument("tableau: more rows than letters");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int x = rows[r][c];
      if (x < 1 || x > alphabet) throw std::invalid_argument("tableau: letter out of range");
      if (c > 0 && rows[r][c - 1] > x) {
        throw std::invalid_argument("tableau: rows must be weakly increasing");
      }
      ++t.at(static_cast<int>(r) + 1, x);
    }
  }
  if (!t.is_valid()) throw std::invalid_argument("tableau: not semistandard");
  return t;
}

int64_t SemistandardTableau::size() const {
  int64_t total = 0;
  for (int64_t c : counts_) total += c;
  return total;
}

int SemistandardTableau::insert(int letter) {
  if (letter < 1 || letter > d_) {
    throw std::invalid_argument("rsk insertion: letter out of range");
  }
  int cur = letter;
  for (int row = 1; row <= d_; ++row) {
    // The leftmost entry strictly greater than cur is an instance of the
    // smallest letter > cur present in this row.
    int bumped = 0;
    for (int a = cur + 1; a <= d_; ++a) {
      if (at(row, a) > 0) {
        bumped = a;
        break;
      }
    }
    ++at(row, cur);
    if (bumped == 0) return row;
    --at(row, bumped);
    cur = bumped;  // strictly larger each step, so the walk ends by row d
  }
  throw std::logic_error("rsk insertion: walked past row d");
}

Partition SemistandardTableau::shape() const {
  std::vector<int64_t> rows_len;
  for (int row = 1; row <= d_; ++row) {
    int64_t len = 0;
    for (int a = row; a <= d_; ++a) len += at(row, a);
    if (len == 0) break;
    rows_len.push_back(len);
  }
  return Partition(std::move(rows_len));
}

SemistandardTableau SemistandardTableau::restrict_below(int letter) const {
  if (letter < 1 || letter > d_ + 1) {
    throw std::invalid_argument("restrict_below: cutoff out of range");
  }
  SemistandardTableau out(d_);
  for (int row = 1; row <= d_; ++row) {
    for (int a = row; a < letter; ++a) out.at(row, a) = at(row, a);
  }
  return out;
}

std::vector<int64_t> SemistandardTableau::type() const {
  std::vector<int64_t> h(d_, 0);
  for (int row = 1; row <= d_; ++row) {
    for (int a = row; a <= d_; ++a) h[a - 1] += at(row, a);
  }
  return h;
}

std::vector<std::vector<int>> SemistandardTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int row = 1; row <= d_; ++row) {
    std::vector<int> cells;
    for (int a = row; a <= d_; ++a) {
      for (int64_t i = 0; i < at(row, a); ++i) cells.push_back(a);
    }
    if (cells.empty()) break;
    out.push_back(std::move(cells));
  }
  return out;
}

std::string SemistandardTableau::str() const {
  std::string out = "[";
  auto rs = rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < rs[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(rs[r][c]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

bool SemistandardTableau::is_valid() const {
  for (int row = 1; row <= d_; ++row) {
    for (int a = 1; a < row; ++a) {
      if (at(row, a) != 0) return false;  // column strictness forces letter >= row
    }
  }
  // Column strictness in count form: the first c_{row+1}(a) cells of row+1
  // hold letters <= a, so the cells directly above them must hold letters
  // <= a-1, i.e. c_{row+1}(a) <= c_row(a-1).
  for (int row = 1; row < d_; ++row) {
    int64_t prefix_above = 0;  // c_row(a-1)
    int64_t prefix_below = 0;  // c_{row+1}(a)
    for (int a = 1; a <= d_; ++a) {
      prefix_below += at(row + 1, a);
      if (prefix_below > prefix_above) return false;
      prefix_above += at(row, a);
    }
  }
  return true;
}

Partition StandardTableau::shape() const {
  std::vector<int64_t> lens;
  lens.reserve(rows.size());
  for (const auto& r : rows) lens.push_back(static_cast<int64_t>(r.size()));
  return Partition(std::move(lens));
}

bool StandardTableau::is_valid() const {
  int64_t n = 0;
  for (const auto& r : rows) n += static_cast<int64_t>(r.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int64_t v = rows[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::string StandardTableau::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(rows[r][c]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

int64_t Overhangs::sum() const {
  int64_t s = 0;
  for (int64_t v : values) s += v;
  return s;
}

SemistandardTableau rsk_insert(SemistandardTableau tableau, int letter) {
  tableau.insert(letter);
  return tableau;
}

RskResult rsk(const Word& word) {
  SemistandardTableau t(word.alphabet);
  StandardTableau s;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    int row = t.insert(word.letters[i]);
    if (static_cast<std::size_t>(row) > s.rows.size()) s.rows.emplace_back();
    s.rows[static_cast<std::size_t>(row) - 1].push_back(static_cast<int64_t>(i) + 1);
  }
  return RskResult{t.shape(), std::move(s), std::move(t)};
}

Overhangs overhangs(const Partition& lambda, const Partition& mu, int alphabet) {
  if (alphabet < 1) throw std::invalid_argument("overhangs: alphabet must be >= 1");
  Overhangs b;
  b.values.resize(static_cast<std::size_t>(alphabet) - 1);
  for (int i = 1; i <= alphabet - 1; ++i) {
    int64_t v = mu.part(i) - lambda.part(i + 1);
    if (v < 0) {
      throw std::invalid_argument("overhangs: shapes are not from one tableau (b_" +
                                  std::to_string(i) + " < 0)");
    }
    b.values[static_cast<std::size_t>(i) - 1] = v;
  }
  return b;
}

int64_t lis_weak(std::span<const int> letters) {
  std::vector<int> tails;  // tails[j] = least possible tail of a length-(j+1) run
  for (int x : letters) {
    auto it = std::upper_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int64_t>(tails.size());
}

int64_t lis_weak(const Word& word) {
  return lis_weak(std::span<const int>(word.letters));
}

namespace {

struct GreeneSearch {
  const std::vector<int>& letters;
  std::vector<int> last;  // last letter per class, 0 = class still empty
  int64_t best = 0;

  void run(std::size_t pos, int64_t taken) {
    int64_t remaining = static_cast<int64_t>(letters.size() - pos);
    if (taken + remaining <= best) return;
    if (pos == letters.size()) {
      best = taken;
      return;
    }
    int x = letters[pos];
    for (std::size_t c = 0; c < last.size(); ++c) {
      if (c > 0 && last[c] == last[c - 1]) continue;  // classes are interchangeable
      if (last[c] <= x) {
        int saved = last[c];
        last[c] = x;
        run(pos + 1, taken + 1);
        last[c] = saved;
      }
    }
    run(pos + 1, taken);
  }
};

}  // namespace

int64_t greene_union(const Word& word, int subsequences, int64_t cap) {
  if (subsequences < 0) throw std::invalid_argument("greene_union: negative count");
  if (static_cast<int64_t>(word.letters.size()) > cap) {
    throw ResourceLimitError("greene_union: word length " +
                             std::to_string(word.letters.size()) + " exceeds cap " +
                             std::to_string(cap));
  }
  if (subsequences == 0) return 0;
  GreeneSearch search{word.letters,
                      std::vector<int>(static_cast<std::size_t>(subsequences), 0)};
  search.run(0, 0);
  return search.best;
}

int64_t num_syt(const Partition& shape) {
  int64_t n = shape.total();
  if (n == 0) return 1;
  if (n > 33) {
    throw std::overflow_error("num_syt: shape too large for exact 64-bit arithmetic");
  }
  std::vector<int64_t> conjugate(static_cast<std::size_t>(shape.part(1)), 0);
  for (std::size_t r = 1; r <= shape.length(); ++r) {
    for (int64_t c = 0; c < shape.part(r); ++c) ++conjugate[static_cast<std::size_t>(c)];
  }
  __int128 factorial = 1;
  for (int64_t i = 2; i <= n; ++i) factorial *= i;
  __int128 hooks = 1;
  for (std::size_t r = 1; r <= shape.length(); ++r) {
    for (int64_t c = 1; c <= shape.part(r); ++c) {
      hooks *= (shape.part(r) - c) + (conjugate[static_cast<std::size_t>(c - 1)] -
                                      static_cast<int64_t>(r)) + 1;
    }
  }
  __int128 count = factorial / hooks;
  if (count > INT64_MAX) {
    throw std::overflow_error("num_syt: count exceeds 64-bit exact range");
  }
  return static_cast<int64_t>(count);
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int alphabet,
                                                int64_t cap) {
  if (alphabet < 1) throw std::invalid_argument("enumerate_ssyt: alphabet must be >= 1");
  if (shape.total() > cap || alphabet > cap) {
    throw ResourceLimitError("enumerate_ssyt: size " + std::to_string(shape.total()) +
                             " with alphabet " + std::to_string(alphabet) +
                             " exceeds cap " + std::to_string(cap));
  }
  std::vector<SemistandardTableau> out;
  if (shape.length() > static_cast<std::size_t>(alphabet)) return out;

  // Fill row by row, choosing the count of each letter in the row. The row
  // above constrains the prefix sums: c_row(a) <= c_{row-1}(a-1).
  struct Worker {
    const Partition& shape;
    int alphabet;
    std::vector<std::vector<int64_t>> row_counts;  // per row: counts for letters 1..d
    std::vector<SemistandardTableau>& out;

    void emit() {
      std::vector<std::vector<int>> rows;
      for (std::size_t r = 0; r < row_counts.size(); ++r) {
        std::vector<int> cells;
        for (int a = 1; a <= alphabet; ++a) {
          for (int64_t i = 0; i < row_counts[r][static_cast<std::size_t>(a - 1)]; ++i) {
            cells.push_back(a);
          }
        }
        rows.push_back(std::move(cells));
      }
      out.push_back(SemistandardTableau::from_rows(alphabet, rows));
    }

    // prefix_above[a] = c_{row-1}(a); fills rows recursively.
    void fill(int row, const std::vector<int64_t>& prefix_above) {
      if (row > static_cast<int>(shape.length())) {
        emit();
        return;
      }
      std::vector<int64_t> counts(static_cast<std::size_t>(alphabet), 0);
      std::vector<int64_t> prefix(static_cast<std::size_t>(alphabet) + 1, 0);
      choose(row, row, shape.part(static_cast<std::size_t>(row)), counts, prefix,
             prefix_above);
    }

    void choose(int row, int letter, int64_t remaining, std::vector<int64_t>& counts,
                std::vector<int64_t>& prefix, const std::vector<int64_t>& prefix_above) {
      if (letter > alphabet) {
        if (remaining != 0) return;
        row_counts.push_back(counts);
        fill(row + 1, prefix);
        row_counts.pop_back();
        return;
      }
      int64_t base = prefix[static_cast<std::size_t>(letter) - 1];
      int64_t limit = remaining;
      if (row > 1) {
        // c_row(letter) <= c_{row-1}(letter-1)
        limit = std::min(limit, prefix_above[static_cast<std::size_t>(letter) - 1] - base);
      }
      for (int64_t take = 0; take <= limit; ++take) {
        counts[static_cast<std::size_t>(letter) - 1] = take;
        prefix[static_cast<std::size_t>(letter)] = base + take;
        choose(row, letter + 1, remaining - take, counts, prefix, prefix_above);
      }
      counts[static_cast<std::size_t>(letter) - 1] = 0;
      prefix[static_cast<std::size_t>(letter)] = base;
    }
  };

  Worker worker{shape, alphabet, {}, out};
  worker.fill(1, std::vector<int64_t>(static_cast<std::size_t>(alphabet) + 1, 0));
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int64_t cap) {
  int64_t n = shape.total();
  if (n > cap) {
    throw ResourceLimitError("enumerate_syt: size " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  }
  std::vector<StandardTableau> out;
  std::vector<std::vector<int64_t>> rows(shape.length());
  std::function<void(int64_t)> place = [&](int64_t next) {
    if (next > n) {
      out.push_back(StandardTableau{rows});
      return;
    }
    for (std::size_t r = 0; r < shape.length(); ++r) {
      bool row_open = static_cast<int64_t>(rows[r].size()) < shape.part(r + 1);
      bool column_ok = r == 0 || rows[r - 1].size() > rows[r].size();
      if (row_open && column_ok) {
        rows[r].push_back(next);
        place(next + 1);
        rows[r].pop_back();
      }
    }
  };
  place(1);
  return out;
}

}  // namespace qpa
