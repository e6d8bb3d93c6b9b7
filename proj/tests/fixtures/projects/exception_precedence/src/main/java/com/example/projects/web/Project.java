package com.example.projects.web;

public class Project {
    private long id;
    private String name;
}
