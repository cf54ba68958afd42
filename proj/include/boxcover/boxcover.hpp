#pragma once

#include "boxcover/error.hpp"
#include "boxcover/geometry.hpp"
#include "boxcover/candidates.hpp"
#include "boxcover/set_cover.hpp"
#include "boxcover/bcc.hpp"
#include "boxcover/rect_poly.hpp"
#include "boxcover/sbcc.hpp"
#include "boxcover/reductions.hpp"
#include "boxcover/corpus.hpp"
#include "boxcover/io.hpp"
#include "boxcover/svg.hpp"
