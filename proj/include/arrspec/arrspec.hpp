#pragma once

#include <arrspec/arrangement.hpp>
#include <arrspec/checks.hpp>
#include <arrspec/error.hpp>
#include <arrspec/face_algebra.hpp>
#include <arrspec/faces.hpp>
#include <arrspec/generators.hpp>
#include <arrspec/io.hpp>
#include <arrspec/lattice.hpp>
#include <arrspec/lp.hpp>
#include <arrspec/matrix.hpp>
#include <arrspec/rational.hpp>
#include <arrspec/skeleton.hpp>
#include <arrspec/spectra.hpp>
#include <arrspec/vg.hpp>
#include <arrspec/walk.hpp>
