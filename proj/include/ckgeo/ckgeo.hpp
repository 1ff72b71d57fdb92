#ifndef CKGEO_CKGEO_HPP_
#define CKGEO_CKGEO_HPP_

#include "checked.hpp"
#include "element.hpp"
#include "geodesics.hpp"
#include "group_model.hpp"
#include "json_io.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "svg.hpp"
#include "words.hpp"

#endif  // CKGEO_CKGEO_HPP_
