// Convenience umbrella: pulls in the whole library.
#pragma once

#include "floodsynth/core/camera.hpp"
#include "floodsynth/core/material.hpp"
#include "floodsynth/core/math.hpp"
#include "floodsynth/core/mesh.hpp"
#include "floodsynth/core/scene.hpp"

#include "floodsynth/flood/levels.hpp"
#include "floodsynth/flood/waves.hpp"

#include "floodsynth/procgen/assets.hpp"
#include "floodsynth/procgen/layout.hpp"
#include "floodsynth/procgen/placement.hpp"
#include "floodsynth/procgen/rng.hpp"

#include "floodsynth/render/drawlist.hpp"
#include "floodsynth/render/framebuffers.hpp"
#include "floodsynth/render/pointcloud.hpp"
#include "floodsynth/render/rasterizer.hpp"
#include "floodsynth/render/raycast.hpp"
#include "floodsynth/render/shading.hpp"

#include "floodsynth/annotate/bbox.hpp"
#include "floodsynth/annotate/exporters.hpp"
#include "floodsynth/annotate/image_io.hpp"
#include "floodsynth/annotate/record.hpp"

#include "floodsynth/pipeline/config.hpp"
#include "floodsynth/pipeline/errors.hpp"
#include "floodsynth/pipeline/generate.hpp"
#include "floodsynth/pipeline/manifest.hpp"
#include "floodsynth/pipeline/stats.hpp"
#include "floodsynth/pipeline/validate.hpp"
