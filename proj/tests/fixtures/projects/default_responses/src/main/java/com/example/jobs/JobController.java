package com.example.jobs;

import org.springframework.http.HttpStatus;
import org.springframework.http.ResponseEntity;
import org.springframework.web.bind.annotation.*;

@RestController
@RequestMapping("/api/jobs")
public class JobController {

    @DeleteMapping("/{id}")
    public void delete(@PathVariable String id) {
    }

    @GetMapping("/{id}")
    public Job find(@PathVariable String id) {
        return null;
    }

    @PostMapping
    @ResponseStatus(HttpStatus.CREATED)
    public Job create(@RequestBody Job job) {
        return job;
    }

    @PutMapping("/{id}")
    public ResponseEntity<Job> update(@PathVariable String id, @RequestBody Job job) {
        if (id.isEmpty()) {
            return new ResponseEntity<>(job, HttpStatus.CREATED);
        }
        return ResponseEntity.ok(job);
    }

    @PostMapping("/{id}/pause")
    public ResponseEntity<Void> pause(@PathVariable String id) {
        return ResponseEntity.noContent().build();
    }
}
