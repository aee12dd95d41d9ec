#pragma once

#include <string>
#include <vector>

#include "wmcs/correspondence.hpp"

namespace wmcs::fp {

/// A named finite instance together with its machine-checkable facts.
struct GalleryFact {
    std::string description;
    bool (*check)(const Poset&, const Correspondence&);
};

struct GalleryInstance {
    std::string name;
    Poset poset;
    Correspondence corr;
    std::vector<GalleryFact> facts;
};

/// Known names: swap-no-xplus, three-point-no-uws,
/// lws-no-minimal-discrete-analogue, figure2, figure3-supp.
/// Throws UnknownGalleryName otherwise.
GalleryInstance gallery(const std::string& name);

std::vector<std::string> gallery_names();

/// Re-derives every fact; returns the descriptions of the ones that fail.
std::vector<std::string> verify_gallery(const GalleryInstance& g);

}  // namespace wmcs::fp
