#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sawstrip {

enum class Step : char { Up = 'u', Down = 'd', Left = 'l', Right = 'r' };

inline constexpr std::array<Step, 4> kAllSteps{Step::Up, Step::Down, Step::Left, Step::Right};

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point delta(Step s) {
  switch (s) {
    case Step::Up: return {0, 1};
    case Step::Down: return {0, -1};
    case Step::Left: return {-1, 0};
    case Step::Right: return {1, 0};
  }
  return {0, 0};
}

constexpr Point operator+(Point p, Step s) {
  const Point d = delta(s);
  return {p.x + d.x, p.y + d.y};
}

// A walk coded as letters over {u, d, l, r}; the empty word is the 0-step walk.
class StepWord {
 public:
  StepWord() = default;
  // Throws Error on letters outside {u, d, l, r}.
  explicit StepWord(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Step operator[](std::size_t i) const { return static_cast<Step>(letters_[i]); }
  const std::string& str() const { return letters_; }

  void push_back(Step s) { letters_.push_back(static_cast<char>(s)); }
  void pop_back() { letters_.pop_back(); }
  StepWord& append(Step s, std::size_t count);
  StepWord& operator+=(const StepWord& other);
  friend StepWord operator+(StepWord a, const StepWord& b) { return a += b; }

  friend auto operator<=>(const StepWord&, const StepWord&) = default;

 private:
  std::string letters_;
};

using Walk = std::vector<Point>;

// Column range [xlo, xhi] x Z. Throws Error("origin not in strip") unless
// xlo <= 0 <= xhi.
class StripSpec {
 public:
  StripSpec(int xlo, int xhi);

  int xlo() const { return xlo_; }
  int xhi() const { return xhi_; }
  int width() const { return xhi_ - xlo_ + 1; }
  bool contains(int x) const { return xlo_ <= x && x <= xhi_; }
  // The strip reflected through x = 0.
  StripSpec reflected() const { return {-xhi_, -xlo_}; }

  friend bool operator==(const StripSpec&, const StripSpec&) = default;

 private:
  int xlo_;
  int xhi_;
};

Walk realize(const StepWord& w);
bool is_valid_saw(const StepWord& w, const StripSpec& s);
// u <-> d; l and r fixed.
StepWord mirror_x(const StepWord& w);
// l <-> r; u and d fixed.
StepWord mirror_y(const StepWord& w);

}  // namespace sawstrip
