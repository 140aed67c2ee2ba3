#include "sawstrip/lattice.hpp"

#include <set>

#include "sawstrip/error.hpp"

namespace sawstrip {

StepWord::StepWord(std::string_view letters) : letters_(letters) {
  for (char c : letters_)
    if (c != 'u' && c != 'd' && c != 'l' && c != 'r')
      throw Error(std::string("invalid step letter '") + c + "'");
}

StepWord& StepWord::append(Step s, std::size_t count) {
  letters_.append(count, static_cast<char>(s));
  return *this;
}

StepWord& StepWord::operator+=(const StepWord& other) {
  letters_ += other.letters_;
  return *this;
}

StripSpec::StripSpec(int xlo, int xhi) : xlo_(xlo), xhi_(xhi) {
  if (!(xlo <= 0 && 0 <= xhi)) throw Error("origin not in strip");
}

Walk realize(const StepWord& w) {
  Walk walk;
  walk.reserve(w.size() + 1);
  Point p{};
  walk.push_back(p);
  for (std::size_t i = 0; i < w.size(); ++i) {
    p = p + w[i];
    walk.push_back(p);
  }
  return walk;
}

bool is_valid_saw(const StepWord& w, const StripSpec& s) {
  std::set<Point> seen;
  for (const Point& p : realize(w)) {
    if (!s.contains(p.x)) return false;
    if (!seen.insert(p).second) return false;
  }
  return true;
}

namespace {

StepWord map_letters(const StepWord& w, Step a, Step b) {
  StepWord out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Step s = w[i];
    out.push_back(s == a ? b : s == b ? a : s);
  }
  return out;
}

}  // namespace

StepWord mirror_x(const StepWord& w) { return map_letters(w, Step::Up, Step::Down); }
StepWord mirror_y(const StepWord& w) { return map_letters(w, Step::Left, Step::Right); }

}  // namespace sawstrip
