#pragma once

#include <map>
#include <vector>

#include "sdg/group.hpp"
#include "sdg/neighbour.hpp"

namespace sdg {

/// G-valued 0-form: a plain function M -> G.
struct Form0 {
    SpacePtr space;
    GroupPtr group;
    std::vector<int> values; // one element index per point

    Form0(SpacePtr m, GroupPtr g, std::vector<int> v);
    int value(int x) const { return values[static_cast<size_t>(x)]; }
};

/// G-valued 1-form: defined on ordered neighbour pairs, identity on the
/// diagonal, with the inverse symmetry w(x,y)^-1 = w(y,x) enforced at
/// construction. Unspecified pairs default to the identity.
class Form1 {
  public:
    Form1(SpacePtr m, GroupPtr g, const std::map<std::pair<int, int>, int>& given);

    const SpacePtr& space() const { return space_; }
    const GroupPtr& group() const { return group_; }
    int value(int x, int y) const;

  private:
    SpacePtr space_;
    GroupPtr group_;
    std::map<std::pair<int, int>, int> vals_;
};

/// G-valued 2-form on infinitesimal 2-simplices; identity whenever two
/// entries of the simplex coincide.
class Form2 {
  public:
    Form2(SpacePtr m, GroupPtr g, std::map<std::vector<int>, int> vals);

    const SpacePtr& space() const { return space_; }
    const GroupPtr& group() const { return group_; }
    int value(int x, int y, int z) const;

    /// Diagnostic: does interchanging two entries invert the value?
    bool alternating() const;

  private:
    SpacePtr space_;
    GroupPtr group_;
    std::map<std::vector<int>, int> vals_;
};

/// df(x,y) = f(x)^-1 f(y).
Form1 coboundary0(const Form0& f);

/// dw(x,y,z) = w(x,y) w(y,z) w(z,x).
Form2 coboundary1(const Form1& w);

/// A 1-form is closed when its coboundary is constantly the identity.
bool is_closed(const Form1& w);

/// The Maurer-Cartan form of G: the coboundary of the identity map on the
/// total neighbour space over G's elements.
Form1 maurer_cartan(const GroupPtr& g);

/// Reflexive symmetric refinement of the neighbour relation.
class Distribution {
  public:
    Distribution(SpacePtr m, std::vector<std::vector<bool>> strong);

    const SpacePtr& space() const { return space_; }
    bool strong(int x, int y) const {
        return strong_[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }

  private:
    SpacePtr space_;
    std::vector<std::vector<bool>> strong_;
};

/// x ~~ y iff x ~ y and w(x,y) = e.
Distribution distribution_from_form(const Form1& w);

/// (x ~~ y) and (x ~~ z) and (y ~ z) together imply y ~~ z.
bool is_involutive(const Distribution& d);

/// On the subset, ~ and ~~ agree.
bool is_integral_subset(const Distribution& d, const std::vector<int>& subset);

} // namespace sdg
