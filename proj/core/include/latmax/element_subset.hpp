#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace latmax {

/// Index of an element inside one lattice. Dense in [0, n).
using ElementId = std::uint32_t;

inline constexpr ElementId kNoElement = static_cast<ElementId>(-1);

/// Fixed-universe bitset over the elements of a host lattice (or the points
/// of a ground set). Every binary operation requires equal universes.
class ElementSubset {
public:
	using Word = std::uint64_t;
	static constexpr std::size_t kWordBits = 64;

	ElementSubset() = default;
	explicit ElementSubset(std::size_t universe)
		: universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

	static ElementSubset full(std::size_t universe) {
		ElementSubset s(universe);
		for(auto& w : s.words_) {
			w = ~Word{0};
		}
		s.trim();
		return s;
	}
	static ElementSubset of(std::size_t universe, std::initializer_list<ElementId> ids) {
		ElementSubset s(universe);
		for(ElementId i : ids) {
			s.insert(i);
		}
		return s;
	}
	static ElementSubset of(std::size_t universe, std::span<const ElementId> ids) {
		ElementSubset s(universe);
		for(ElementId i : ids) {
			s.insert(i);
		}
		return s;
	}

	std::size_t universe() const { return universe_; }

	bool contains(ElementId i) const {
		return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
	}
	void insert(ElementId i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
	void erase(ElementId i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
	void assign(ElementId i, bool value) {
		if(value) {
			insert(i);
		} else {
			erase(i);
		}
	}

	ElementSubset with(ElementId i) const {
		ElementSubset r = *this;
		r.insert(i);
		return r;
	}
	ElementSubset without(ElementId i) const {
		ElementSubset r = *this;
		r.erase(i);
		return r;
	}

	std::size_t count() const {
		std::size_t c = 0;
		for(Word w : words_) {
			c += static_cast<std::size_t>(std::popcount(w));
		}
		return c;
	}
	bool empty() const {
		for(Word w : words_) {
			if(w) return false;
		}
		return true;
	}
	bool is_full() const { return count() == universe_; }

	/// First member, or kNoElement.
	ElementId first() const { return next_from(0); }
	/// Smallest member >= i, or kNoElement.
	ElementId next_from(std::size_t i) const {
		if(i >= universe_) return kNoElement;
		std::size_t wi = i / kWordBits;
		Word w = words_[wi] & (~Word{0} << (i % kWordBits));
		while(true) {
			if(w) {
				return static_cast<ElementId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
			}
			if(++wi == words_.size()) return kNoElement;
			w = words_[wi];
		}
	}

	template <typename F>
	void for_each(F&& f) const {
		for(std::size_t wi = 0; wi < words_.size(); ++wi) {
			Word w = words_[wi];
			while(w) {
				f(static_cast<ElementId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
				w &= w - 1;
			}
		}
	}

	std::vector<ElementId> elements() const {
		std::vector<ElementId> out;
		out.reserve(count());
		for_each([&](ElementId i) { out.push_back(i); });
		return out;
	}

	bool is_subset_of(const ElementSubset& o) const {
		for(std::size_t i = 0; i < words_.size(); ++i) {
			if(words_[i] & ~o.words_[i]) return false;
		}
		return true;
	}
	bool intersects(const ElementSubset& o) const {
		for(std::size_t i = 0; i < words_.size(); ++i) {
			if(words_[i] & o.words_[i]) return true;
		}
		return false;
	}

	ElementSubset& operator&=(const ElementSubset& o) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
		return *this;
	}
	ElementSubset& operator|=(const ElementSubset& o) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
		return *this;
	}
	ElementSubset& operator-=(const ElementSubset& o) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
		return *this;
	}
	ElementSubset& operator^=(const ElementSubset& o) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
		return *this;
	}
	friend ElementSubset operator&(ElementSubset a, const ElementSubset& b) { return a &= b; }
	friend ElementSubset operator|(ElementSubset a, const ElementSubset& b) { return a |= b; }
	friend ElementSubset operator-(ElementSubset a, const ElementSubset& b) { return a -= b; }
	friend ElementSubset operator^(ElementSubset a, const ElementSubset& b) { return a ^= b; }

	/// Complement relative to the universe.
	ElementSubset operator~() const {
		ElementSubset r = *this;
		for(auto& w : r.words_) w = ~w;
		r.trim();
		return r;
	}

	friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
	/// Deterministic total order: the set owning the lowest differing member sorts first.
	friend std::strong_ordering operator<=>(const ElementSubset& a, const ElementSubset& b) {
		if(auto c = a.universe_ <=> b.universe_; c != 0) return c;
		for(std::size_t i = 0; i < a.words_.size(); ++i) {
			if(a.words_[i] == b.words_[i]) continue;
			Word diff = a.words_[i] ^ b.words_[i];
			Word low = diff & (~diff + 1);
			return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
		}
		return std::strong_ordering::equal;
	}

	std::size_t hash() const {
		std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
		for(Word w : words_) {
			h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		}
		return h;
	}

	std::span<const Word> words() const { return words_; }

private:
	void trim() {
		if(universe_ % kWordBits && !words_.empty()) {
			words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
		}
	}

	std::size_t universe_ = 0;
	std::vector<Word> words_;
};

}  // namespace latmax

template <>
struct std::hash<latmax::ElementSubset> {
	std::size_t operator()(const latmax::ElementSubset& s) const noexcept { return s.hash(); }
};
