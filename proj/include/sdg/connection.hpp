#pragma once

#include <map>
#include <optional>

#include "sdg/forms.hpp"

namespace sdg {

// ---------------------------------------------------------------------------
// groupoid connections, vertex-group model
// ---------------------------------------------------------------------------

/// Connection with values in a single group G (all vertex groups identified):
/// an assignment of transports to ordered neighbour pairs with
/// nabla(x,x) = e and nabla(y,x) = nabla(x,y)^-1. Unspecified pairs default
/// to the identity (the flat connection).
class GroupConnection {
  public:
    GroupConnection(SpacePtr m, GroupPtr g, const std::map<std::pair<int, int>, int>& given)
        : form_(std::move(m), std::move(g), given) {}

    const SpacePtr& space() const { return form_.space(); }
    const GroupPtr& group() const { return form_.group(); }
    int transport(int x, int y) const { return form_.value(x, y); }

  private:
    Form1 form_; // same data and invariants as a 1-form
};

/// R(x,y,z) = nabla(x,y) . nabla(y,z) . nabla(z,x), composing left to right.
int curvature(const GroupConnection& c, int x, int y, int z);

/// id = R(yzu)^nabla(y,x) . R(xyu) . R(xuz) . R(xzy), with g^h = h^-1 g h.
bool bianchi_check(const GroupConnection& c, int x, int y, int z, int u);

// ---------------------------------------------------------------------------
// full finite groupoids
// ---------------------------------------------------------------------------

/// Finite groupoid over a fixed object set: arrows with sources, targets,
/// identities, a partial composition table (left to right), and inverses.
/// Axioms are verified at construction.
class FiniteGroupoid {
  public:
    FiniteGroupoid(int objects, std::vector<std::string> arrow_names, std::vector<int> src,
                   std::vector<int> dst, std::vector<std::vector<int>> comp);

    int objects() const { return objects_; }
    int arrows() const { return static_cast<int>(names_.size()); }
    int src(int a) const { return src_[static_cast<size_t>(a)]; }
    int dst(int a) const { return dst_[static_cast<size_t>(a)]; }
    int identity(int object) const { return id_[static_cast<size_t>(object)]; }
    /// a followed by b; requires dst(a) = src(b).
    int compose(int a, int b) const;
    int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
    const std::string& arrow_name(int a) const { return names_[static_cast<size_t>(a)]; }
    int arrow_index(const std::string& name) const;

    /// The groupoid with exactly one arrow between any two objects.
    static std::shared_ptr<const FiniteGroupoid> pair_groupoid(int objects);
    /// Connected groupoid with the given vertex group: arrows are
    /// (source, target, g).
    static std::shared_ptr<const FiniteGroupoid> from_group(int objects, const GroupPtr& g);

  private:
    int objects_;
    std::vector<std::string> names_;
    std::vector<int> src_, dst_, id_, inv_;
    std::vector<std::vector<int>> comp_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Connection in a groupoid over the same object set as the neighbour space:
/// nabla(x,y) is an arrow x -> y, nabla(x,x) = id_x, nabla(y,x) = nabla(x,y)^-1.
class GroupoidConnection {
  public:
    GroupoidConnection(SpacePtr m, GroupoidPtr phi, std::map<std::pair<int, int>, int> given);

    const SpacePtr& space() const { return space_; }
    const GroupoidPtr& groupoid() const { return phi_; }
    int transport(int x, int y) const;

  private:
    SpacePtr space_;
    GroupoidPtr phi_;
    std::map<std::pair<int, int>, int> vals_;
};

/// Curvature arrow in the vertex group Phi(x,x).
int curvature(const GroupoidConnection& c, int x, int y, int z);
bool bianchi_check(const GroupoidConnection& c, int x, int y, int z, int u);

// ---------------------------------------------------------------------------
// affine connections
// ---------------------------------------------------------------------------

/// lambda(x,y,z): infinitesimal parallel transport of z along xy, defined on
/// triples x ~ y, x ~ z, with lambda(x,x,z) = z and lambda(x,y,x) = y.
/// The table may be partial; transporting through a missing entry errors.
class AffineConnection {
  public:
    AffineConnection(SpacePtr m, std::map<std::vector<int>, int> table);

    const SpacePtr& space() const { return space_; }
    std::optional<int> lambda(int x, int y, int z) const;
    int lambda_or_throw(int x, int y, int z) const;
    /// lambda(x,y,z) = lambda(x,z,y) wherever both are defined.
    bool symmetric() const;

    /// M = G with total neighbour relation and lambda(x,y,z) = z x^-1 y.
    static AffineConnection group_translation(const GroupPtr& g);

  private:
    SpacePtr space_;
    std::map<std::vector<int>, int> table_;
};

struct AffineCurvatureResult {
    std::vector<std::pair<int, int>> transport; // z -> z' over the monad of x0
    bool bijection_fixing_base;
};

/// z |-> lambda(x2,x0, lambda(x1,x2, lambda(x0,x1,z))) on the monad of x0.
AffineCurvatureResult affine_curvature(const AffineConnection& c, int x0, int x1, int x2);

/// Stability of a subset under lambda; requires a torsion-free connection.
bool is_geodesic(const AffineConnection& c, const std::vector<int>& subset);

// ---------------------------------------------------------------------------
// bundle connections
// ---------------------------------------------------------------------------

/// Action of neighbour pairs on the fibers of a finite bundle pi: E -> M,
/// with nabla(x,x) = id and nabla(y,x) . nabla(x,y) = id.
class BundleConnection {
  public:
    BundleConnection(SpacePtr m, std::vector<std::string> total_points, std::vector<int> proj,
                     std::map<std::pair<int, int>, std::map<int, int>> transports);

    const SpacePtr& base() const { return space_; }
    int total_size() const { return static_cast<int>(total_.size()); }
    const std::string& total_point_name(int e) const { return total_[static_cast<size_t>(e)]; }
    int projection(int e) const { return proj_[static_cast<size_t>(e)]; }
    std::vector<int> fiber(int x) const;

    /// Transport e over x to the fiber over y; errors when pi(e) != x.
    int transport(int x, int y, int e) const;

    /// The affine connection as a bundle: E = M_(1), pi = first projection,
    /// nabla(x,y)(z) = lambda(x,y,z).
    static BundleConnection from_affine(const AffineConnection& c);

  private:
    SpacePtr space_;
    std::vector<std::string> total_;
    std::vector<int> proj_;
    std::map<std::pair<int, int>, std::map<int, int>> transports_;
};

} // namespace sdg
