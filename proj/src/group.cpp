#include "cutgk/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "cutgk/error.hpp"

namespace cutgk {

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::size_t bound = kDefaultElementBound;
  std::vector<Permutation> gens;
  std::vector<ElemId> gen_ids;

  std::vector<Point> flat;  // order * degree images
  std::size_t count = 0;

  // Open-addressing index keyed by image array.
  std::vector<ElemId> slots;
  std::size_t mask = 0;

  std::vector<ElemId> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<ElemId> cayley;  // count * ngens

  mutable std::once_flag inverse_once;
  mutable std::vector<ElemId> inverses;
  mutable std::once_flag order_once;
  mutable std::vector<std::uint32_t> orders;
  mutable std::once_flag class_once;
  mutable ClassPartition partition;

  static constexpr ElemId kEmpty = std::numeric_limits<ElemId>::max();

  std::span<const Point> row(ElemId id) const { return {flat.data() + id * degree, degree}; }

  std::optional<ElemId> lookup(std::span<const Point> images) const {
    std::size_t h = static_cast<std::size_t>(hash_images(images)) & mask;
    while (true) {
      ElemId slot = slots[h];
      if (slot == kEmpty) return std::nullopt;
      if (std::equal(images.begin(), images.end(), flat.data() + slot * degree)) return slot;
      h = (h + 1) & mask;
    }
  }

  void rehash(std::size_t capacity) {
    slots.assign(capacity, kEmpty);
    mask = capacity - 1;
    for (ElemId id = 0; id < count; ++id) place(id);
  }

  void place(ElemId id) {
    std::size_t h = static_cast<std::size_t>(hash_images(row(id))) & mask;
    while (slots[h] != kEmpty) h = (h + 1) & mask;
    slots[h] = id;
  }

  // Returns (id, inserted).
  std::pair<ElemId, bool> insert(std::span<const Point> images) {
    if (auto found = lookup(images)) return {*found, false};
    if ((count + 1) * 2 > slots.size()) {
      rehash(slots.size() * 2);
    }
    ElemId id = static_cast<ElemId>(count++);
    flat.insert(flat.end(), images.begin(), images.end());
    place(id);
    return {id, true};
  }
};

}  // namespace detail

namespace {

std::vector<Point>& scratch(std::size_t degree) {
  thread_local std::vector<Point> buffer;
  buffer.resize(degree);
  return buffer;
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(std::vector<Permutation> gens, std::size_t degree,
                                         std::size_t element_bound) {
  if (degree == 0 || degree > kMaxDegree)
    raise(ErrorKind::InvalidArgument, "degree must be in [1, 65535]");
  for (const auto& g : gens)
    if (g.degree() != degree)
      raise(ErrorKind::DegreeMismatch, "generator " + g.to_string() + " has degree " +
                                           std::to_string(g.degree()) + ", expected " +
                                           std::to_string(degree));
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->bound = element_bound;
  data->gens = std::move(gens);
  data->slots.assign(64, detail::GroupData::kEmpty);
  data->mask = 63;

  const Permutation id = Permutation::identity(degree);
  data->insert(id.images());
  data->parent.push_back(0);
  data->parent_gen.push_back(0);

  const std::size_t ngens = data->gens.size();
  std::vector<Point> buf(degree);
  for (ElemId x = 0; x < data->count; ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const Point* xs = data->flat.data() + static_cast<std::size_t>(x) * degree;
      const auto gimg = data->gens[s].images();
      for (std::size_t i = 0; i < degree; ++i) buf[i] = gimg[xs[i]];
      auto [y, inserted] = data->insert(buf);
      if (inserted) {
        if (data->count > element_bound)
          raise(ErrorKind::ClosureExceedsBound,
                "group closure exceeds element bound " + std::to_string(element_bound));
        data->parent.push_back(x);
        data->parent_gen.push_back(static_cast<std::uint32_t>(s));
      }
      data->cayley.push_back(y);
    }
  }
  for (const auto& g : data->gens) data->gen_ids.push_back(*data->lookup(g.images()));
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->count; }
std::size_t FiniteGroup::element_bound() const noexcept { return data_->bound; }
const std::vector<Permutation>& FiniteGroup::generators() const noexcept { return data_->gens; }
std::size_t FiniteGroup::generator_count() const noexcept { return data_->gens.size(); }
ElemId FiniteGroup::generator_id(std::size_t i) const { return data_->gen_ids.at(i); }
std::vector<ElemId> FiniteGroup::generator_ids() const { return data_->gen_ids; }

Permutation FiniteGroup::element(ElemId id) const {
  auto r = images(id);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

std::span<const Point> FiniteGroup::images(ElemId id) const {
  if (id >= data_->count) raise(ErrorKind::NotAMember, "element id out of range");
  return data_->row(id);
}

std::optional<ElemId> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != data_->degree) return std::nullopt;
  return data_->lookup(images);
}

std::optional<ElemId> FiniteGroup::find(const Permutation& p) const { return find(p.images()); }

ElemId FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != data_->degree)
    raise(ErrorKind::DegreeMismatch, "permutation degree does not match group degree");
  auto id = find(p);
  if (!id) raise(ErrorKind::NotAMember, "permutation " + p.to_string() + " is not in the group");
  return *id;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  const std::size_t d = data_->degree;
  auto& buf = scratch(d);
  const Point* pa = data_->flat.data() + static_cast<std::size_t>(a) * d;
  const Point* pb = data_->flat.data() + static_cast<std::size_t>(b) * d;
  for (std::size_t i = 0; i < d; ++i) buf[i] = pb[pa[i]];
  return *data_->lookup(buf);
}

ElemId FiniteGroup::inv(ElemId a) const {
  std::call_once(data_->inverse_once, [this] {
    const std::size_t d = data_->degree;
    std::vector<Point> buf(d);
    data_->inverses.resize(data_->count);
    for (ElemId x = 0; x < data_->count; ++x) {
      const Point* px = data_->flat.data() + static_cast<std::size_t>(x) * d;
      for (std::size_t i = 0; i < d; ++i) buf[px[i]] = static_cast<Point>(i);
      data_->inverses[x] = *data_->lookup(buf);
    }
  });
  return data_->inverses[a];
}

ElemId FiniteGroup::pow(ElemId a, long long k) const {
  const std::size_t d = data_->degree;
  auto& buf = scratch(d);
  const Point* pa = data_->flat.data() + static_cast<std::size_t>(a) * d;
  std::vector<bool> seen(d, false);
  std::vector<Point> cycle;
  for (std::size_t s = 0; s < d; ++s) {
    if (seen[s]) continue;
    cycle.clear();
    for (std::size_t x = s; !seen[x]; x = pa[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i) buf[cycle[i]] = cycle[(i + shift) % len];
  }
  return *data_->lookup(buf);
}

ElemId FiniteGroup::conj(ElemId x, ElemId g) const {
  // (g^-1 x g) maps g(i) -> g(x(i)).
  const std::size_t d = data_->degree;
  auto& buf = scratch(d);
  const Point* px = data_->flat.data() + static_cast<std::size_t>(x) * d;
  const Point* pg = data_->flat.data() + static_cast<std::size_t>(g) * d;
  for (std::size_t i = 0; i < d; ++i) buf[pg[i]] = pg[px[i]];
  return *data_->lookup(buf);
}

ElemId FiniteGroup::comm(ElemId x, ElemId y) const { return mul(inv(x), conj(x, y)); }

bool FiniteGroup::commute(ElemId a, ElemId b) const {
  const std::size_t d = data_->degree;
  const Point* pa = data_->flat.data() + static_cast<std::size_t>(a) * d;
  const Point* pb = data_->flat.data() + static_cast<std::size_t>(b) * d;
  for (std::size_t i = 0; i < d; ++i)
    if (pb[pa[i]] != pa[pb[i]]) return false;
  return true;
}

std::uint64_t FiniteGroup::element_order(ElemId a) const {
  std::call_once(data_->order_once, [this] {
    const std::size_t d = data_->degree;
    data_->orders.resize(data_->count);
    std::vector<bool> seen(d);
    for (ElemId x = 0; x < data_->count; ++x) {
      const Point* px = data_->flat.data() + static_cast<std::size_t>(x) * d;
      std::fill(seen.begin(), seen.end(), false);
      std::uint64_t ord = 1;
      for (std::size_t s = 0; s < d; ++s) {
        if (seen[s]) continue;
        std::uint64_t len = 0;
        for (std::size_t y = s; !seen[y]; y = px[y]) {
          seen[y] = true;
          ++len;
        }
        ord = std::lcm(ord, len);
      }
      data_->orders[x] = static_cast<std::uint32_t>(ord);
    }
  });
  if (a >= data_->count) raise(ErrorKind::NotAMember, "element id out of range");
  return data_->orders[a];
}

ElemId FiniteGroup::right_mul_generator(ElemId a, std::size_t gen) const {
  return data_->cayley[static_cast<std::size_t>(a) * data_->gens.size() + gen];
}

ElemId FiniteGroup::word_parent(ElemId a) const { return data_->parent.at(a); }
std::size_t FiniteGroup::word_generator(ElemId a) const { return data_->parent_gen.at(a); }

std::vector<std::size_t> FiniteGroup::word(ElemId a) const {
  std::vector<std::size_t> w;
  while (a != kIdentity) {
    w.push_back(data_->parent_gen[a]);
    a = data_->parent[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteGroup::word_string(ElemId a) const {
  auto w = word(a);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += 'g' + std::to_string(w[i]);
  }
  return out;
}

ElemId FiniteGroup::evaluate_word(std::string_view text) const {
  auto bad = [&](std::size_t col, const std::string& what) -> Error {
    return Error(ErrorKind::SyntaxError,
                 "bad element word at column " + std::to_string(col + 1) + ": " + what,
                 SourcePos{1, col + 1});
  };
  ElemId acc = kIdentity;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  skip();
  if (i == text.size()) throw bad(i, "empty word");
  while (i < text.size()) {
    ElemId factor;
    if (text[i] == '1' || text[i] == 'e') {
      factor = kIdentity;
      ++i;
    } else if (text[i] == 'g') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw bad(i, "expected generator index");
      std::size_t idx = std::stoul(std::string(text.substr(start, i - start)));
      if (idx >= generator_count()) throw bad(start, "no generator g" + std::to_string(idx));
      factor = generator_id(idx);
    } else {
      throw bad(i, std::string("unexpected character '") + text[i] + "'");
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw bad(i, "expected exponent");
      long long k = std::stoll(std::string(text.substr(start, i - start)));
      factor = pow(factor, negative ? -k : k);
    }
    acc = mul(acc, factor);
    skip();
  }
  return acc;
}

const ClassPartition& FiniteGroup::classes() const {
  std::call_once(data_->class_once, [this] {
    auto& part = data_->partition;
    const std::size_t n = data_->count;
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    part.class_of.assign(n, kUnset);
    std::vector<ElemId> gen_ids = data_->gen_ids;
    for (ElemId x = 0; x < n; ++x) {
      if (part.class_of[x] != kUnset) continue;
      const auto cid = static_cast<std::uint32_t>(part.classes.size());
      std::vector<ElemId> orbit{x};
      part.class_of[x] = cid;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (ElemId s : gen_ids) {
          ElemId y = conj(orbit[i], s);
          if (part.class_of[y] == kUnset) {
            part.class_of[y] = cid;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      part.classes.push_back(std::move(orbit));
    }
  });
  return data_->partition;
}

std::size_t FiniteGroup::class_of(ElemId a) const { return classes().class_of.at(a); }

Subgroup FiniteGroup::whole() const {
  Subgroup h(*this);
  h.elements_.resize(order());
  std::iota(h.elements_.begin(), h.elements_.end(), ElemId{0});
  h.member_.assign(order(), true);
  for (ElemId g : data_->gen_ids)
    if (g != kIdentity && std::find(h.gens_.begin(), h.gens_.end(), g) == h.gens_.end())
      h.gens_.push_back(g);
  return h;
}

Subgroup FiniteGroup::trivial() const {
  Subgroup h(*this);
  h.elements_ = {kIdentity};
  h.member_.assign(order(), false);
  h.member_[kIdentity] = true;
  return h;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup Subgroup::generated(const FiniteGroup& parent, std::span<const ElemId> gens) {
  Subgroup h(parent);
  h.member_.assign(parent.order(), false);
  h.member_[FiniteGroup::kIdentity] = true;
  h.elements_.push_back(FiniteGroup::kIdentity);
  for (ElemId g : gens) {
    if (g >= parent.order()) raise(ErrorKind::NotAMember, "generator id out of range");
    if (g != FiniteGroup::kIdentity &&
        std::find(h.gens_.begin(), h.gens_.end(), g) == h.gens_.end())
      h.gens_.push_back(g);
  }
  for (std::size_t i = 0; i < h.elements_.size(); ++i) {
    for (ElemId s : h.gens_) {
      ElemId y = parent.mul(h.elements_[i], s);
      if (!h.member_[y]) {
        h.member_[y] = true;
        h.elements_.push_back(y);
      }
    }
  }
  std::sort(h.elements_.begin(), h.elements_.end());
  return h;
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<ElemId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> member(parent.order(), false);
  for (ElemId e : elements) {
    if (e >= parent.order()) raise(ErrorKind::NotAMember, "element id out of range");
    member[e] = true;
  }
  if (elements.empty() || !member[FiniteGroup::kIdentity])
    raise(ErrorKind::NotASubgroup, "element set lacks the identity");
  std::vector<ElemId> gens;
  Subgroup current = parent.trivial();
  for (ElemId e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = generated(parent, gens);
    if (current.order() > elements.size())
      raise(ErrorKind::NotASubgroup, "element set is not closed under multiplication");
  }
  if (current.elements_ != elements)
    raise(ErrorKind::NotASubgroup, "element set is not a subgroup");
  return current;
}

std::vector<Permutation> Subgroup::generator_permutations() const {
  std::vector<Permutation> out;
  for (ElemId g : gens_) out.push_back(parent_.element(g));
  return out;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (elements_.size() > other.elements_.size()) return false;
  for (ElemId e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

FiniteGroup Subgroup::as_group(std::size_t element_bound) const {
  return FiniteGroup::from_generators(generator_permutations(), parent_.degree(), element_bound);
}

}  // namespace cutgk
